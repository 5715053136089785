#pragma once

#include <stdexcept>
#include <string>

namespace bfre {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed or out-of-range input text
struct ParseError : Error {
    using Error::Error;
};

// ragged matrices, length mismatches, empty systems
struct DimensionError : Error {
    using Error::Error;
};

// operation invoked outside its stated precondition
struct ContractError : Error {
    using Error::Error;
};

// work bound exceeded (enumeration cap, grid cap)
struct ResourceLimitError : Error {
    using Error::Error;
};

} // namespace bfre
