#pragma once

#include <stdexcept>
#include <string>

namespace cuhg
{
    /// Malformed input file or unknown identifier. Maps to CLI exit code 1.
    class InputError : public std::runtime_error
    {
        public:
            explicit InputError(const std::string & msg) : std::runtime_error(msg) {}
    };

    /// An operation was called outside its documented precondition.
    class PreconditionError : public std::invalid_argument
    {
        public:
            explicit PreconditionError(const std::string & msg) : std::invalid_argument(msg) {}
    };

    /// A branch that the construction argument says cannot happen was reached.
    /// Maps to CLI exit code 3.
    class InternalAssertion : public std::logic_error
    {
        public:
            explicit InternalAssertion(const std::string & msg) : std::logic_error(msg) {}
    };

    /// The classifier could not separate the remaining candidate families.
    /// Maps to CLI exit code 2.
    class UnclassifiableAtLevel : public std::runtime_error
    {
        public:
            explicit UnclassifiableAtLevel(const std::string & msg) : std::runtime_error(msg) {}
    };
}
