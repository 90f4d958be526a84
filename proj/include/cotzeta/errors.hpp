#ifndef COTZETA_ERRORS_HPP
#define COTZETA_ERRORS_HPP

#include <stdexcept>

namespace cotzeta
{

// Malformed or out-of-domain arguments (bad radicand, rational alpha, m < 2, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division by zero, zero to a negative power, vanishing Moebius denominator.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// cot(pi n alpha) hit a pole: n alpha is an integer.
struct PoleError : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

// eta^(2m-2) == 1, so the closed form has a zero denominator.
struct DegenerateUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// A quantity proven positive came out non-positive. Always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cotzeta

#endif
