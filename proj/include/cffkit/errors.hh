/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_ERRORS_HH
#define CFFKIT_GUARD_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cffkit
{
    /// Bad parameters or malformed input. Maps to CLI exit code 2.
    class UsageError : public std::runtime_error
    {
        public:
            explicit UsageError(const std::string & m) : std::runtime_error(m) { }
    };

    /// Subset rank/unrank out of range.
    class EncodingError : public UsageError
    {
        public:
            explicit EncodingError(const std::string & m) : UsageError("encoding error: " + m) { }
    };

    /// An instance exceeds a desk-scale guard. Maps to CLI exit code 3.
    class CapacityError : public std::runtime_error
    {
        public:
            explicit CapacityError(const std::string & m) : std::runtime_error(m) { }
    };

    /// Randomised construction gave up. Maps to CLI exit code 4.
    class AttemptsExhausted : public std::runtime_error
    {
        private:
            std::uint64_t _attempts;

        public:
            AttemptsExhausted(const std::string & m, std::uint64_t attempts) :
                std::runtime_error(m),
                _attempts(attempts)
            {
            }

            auto attempts() const -> std::uint64_t { return _attempts; }
    };
}

#endif
