#include "tap/rational.hpp"

#include <cctype>

#include "tap/errors.hpp"

namespace tap {

Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    // strict format: -?digits(/digits)?, nonzero denominator
    auto bad = [&]() -> SchemaError {
        return SchemaError("not a rational: \"" + s + "\" (expected \"p\" or \"p/q\")");
    };
    if (s.empty()) throw bad();
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw bad();
    size_t slash = std::string::npos;
    for (size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (slash != std::string::npos || j == i || j + 1 == s.size()) throw bad();
            slash = j;
        } else if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw bad();
        }
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw bad();
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    Rat c(r);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat harmonic(long k) {
    Rat h(0);
    for (long i = 1; i <= k; ++i) h += make_rat(1, i);
    return h;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace tap
