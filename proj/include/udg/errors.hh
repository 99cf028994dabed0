#ifndef UDG_GUARD_UDG_ERRORS_HH
#define UDG_GUARD_UDG_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace udg
{
    /// Malformed text input (graph, embedding, certificate or DIMACS files).
    class ParseError : public std::runtime_error
    {
        public:
            explicit ParseError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// A file could not be opened, read or written.
    class IoError : public std::runtime_error
    {
        public:
            explicit IoError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// An exhaustive routine was asked to run on an input above its size cap.
    class CapExceeded : public std::runtime_error
    {
        public:
            explicit CapExceeded(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };
}

#endif
