#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/// Parse failure; line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct SpaceDocument {
    std::string name;
    SimplicialSet set;
};

/// Reads an "SSET 1" document (see docs/space-format.md) and validates it.
SpaceDocument parse_document(std::string_view text);
inline SimplicialSet parse_space(std::string_view text) { return parse_document(text).set; }

/// Canonical document: dimension-major, id-minor, compact face lists.
std::string print_space(const SimplicialSet& k, const std::string& name = {});

}  // namespace simplicial
