#include "vcgap/rat.hpp"

#include <cctype>

#include "vcgap/errors.hpp"

namespace vcgap {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rat rat_parse(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.empty()) throw ParseError("empty rational literal");

    const std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);

    bool negative = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
        negative = (num[0] == '-');
        num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational literal '" + text + "'");
    }

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in rational literal '" + text + "'");
    if (negative) n = -n;

    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

std::vector<std::string> rat_strs(const std::vector<Rat>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rat& v : values) out.push_back(rat_str(v));
    return out;
}

}  // namespace vcgap
