#include "tropbt/rational.hpp"

#include "tropbt/errors.hpp"

#include <cctype>

namespace tropbt {

Rat parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(errc::malformed_rational, "empty rational literal");

    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) start = 1;
        if (start == part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid(num, true) || !valid(den, false))
        fail(errc::malformed_rational, "malformed rational literal: '" + text + "'");
    if (den == "0") fail(errc::malformed_rational, "zero denominator in '" + text + "'");

    mpz_class n(num), d(den);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace tropbt
