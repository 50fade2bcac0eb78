#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homcount/nat.hpp"

namespace homcount::bfile {

/// OEIS b-file: one "index value" pair per line, '#' comments ignored.
/// Indices are strictly increasing; values are nonnegative.
struct BFile {
  std::vector<std::pair<std::int64_t, Nat>> entries;

  bool operator==(const BFile&) const = default;
};

/// Parse failure; the message carries the 1-based line number.
class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

void write_bfile(std::ostream& out, const BFile& bfile);

}  // namespace homcount::bfile
