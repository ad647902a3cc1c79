#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitop {

enum class ErrorKind {
    BadParams,
    FamilyTruncated,
    NotTopen,
    SeedNotOpen,
    SeedEmpty,
    UnknownFixture,
    ParseError,
    SchemaError,
    Usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace semitop
