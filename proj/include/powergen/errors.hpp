#ifndef POWERGEN_ERRORS_HPP
#define POWERGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powergen
{

// Argument outside the domain of an operation (negative index, x = 0 for Ei, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A numeric series could not reach the requested tolerance. Carries the last
// available truncation bound.
class accuracy_error : public std::runtime_error
{
public:
    accuracy_error(const std::string &what, double last_bound)
        : std::runtime_error(what), m_last_bound(last_bound)
    {
    }

    double last_bound() const noexcept
    {
        return m_last_bound;
    }

private:
    double m_last_bound;
};

} // namespace powergen

#endif
