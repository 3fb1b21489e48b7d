/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_ERRORS_HH
#define WAVELAB_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace wavelab
{
    /// Bad input or a violated precondition. The CLI maps this to exit status 1.
    class DomainError : public std::runtime_error
    {
        public:
            explicit DomainError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// A construction or extraction produced output that failed its own
    /// verification. Never expected; indicates a bug.
    class VerificationFailure : public std::logic_error
    {
        public:
            explicit VerificationFailure(const std::string & message) :
                std::logic_error(message)
            {
            }
    };
}

#endif
