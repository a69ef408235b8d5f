#include "exactreal/errors.hpp"

#include <sstream>

namespace exact {

namespace {

std::string parse_message(std::size_t offset, const std::vector<std::string>& expected,
                          const std::string& found) {
    std::ostringstream os;
    os << "syntax error at offset " << offset << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
        os << expected[i];
    }
    os << ", found " << found;
    return os.str();
}

} // namespace

ParseError::ParseError(std::size_t offset_, std::vector<std::string> expected_, std::string found_)
    : Error(parse_message(offset_, expected_, found_)),
      offset(offset_),
      expected(std::move(expected_)),
      found(std::move(found_)) {}

} // namespace exact
