#include "toric/rational.hpp"

#include <cctype>

#include "toric/errors.hpp"

namespace toric {

std::string rat_to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(const std::string& s) {
    auto bad = [&]() -> Rat {
        throw SchemaError("not a rational literal: \"" + s + "\"");
    };
    if (s.empty()) return bad();
    auto slash = s.find('/');
    std::string ns = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string ds = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!is_int(ns) || !is_int(ds)) return bad();
    Int num(ns), den(ds);
    if (den == 0) return bad();
    return Rat(num) / Rat(den);
}

Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

}  // namespace toric
