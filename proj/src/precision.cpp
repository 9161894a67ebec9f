#include "ineq/precision.hpp"

#include <mpfr.h>

namespace ineq {

std::string format_decimal(const Real& x, unsigned bits) {
    // iostream scientific precision counts digits after the point; emit
    // exactly digits_for_bits(bits) significant digits.
    return x.str(digits_for_bits(bits) - 1, std::ios_base::scientific);
}

std::string format_hex(const Real& x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", x.backend().data());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real parse_hex(const std::string& s) {
    Real x;
    if (mpfr_set_str(x.backend().data(), s.c_str(), 16, MPFR_RNDN) != 0)
        throw ValidationError("unparseable hex float: " + s);
    return x;
}

}  // namespace ineq
