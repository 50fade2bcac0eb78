#include "homcount/bfile.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace homcount::bfile {

namespace {

[[noreturn]] void fail(std::size_t line_number, const std::string& what) {
  throw BFileError("b-file line " + std::to_string(line_number) + ": " + what);
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile result;
  std::string line;
  std::size_t line_number = 0;
  bool have_previous = false;
  std::int64_t previous_index = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::int64_t index = 0;
    std::string value_text;
    std::string extra;
    if (!(fields >> index >> value_text)) {
      fail(line_number, "expected \"index value\"");
    }
    if (fields >> extra) {
      fail(line_number, "trailing field \"" + extra + "\"");
    }
    Nat value;
    try {
      value = nat_from_decimal(value_text);
    } catch (const std::invalid_argument&) {
      fail(line_number,
           "value \"" + value_text + "\" is not a nonnegative integer");
    }
    if (have_previous && index <= previous_index) {
      fail(line_number, "index " + std::to_string(index) +
                            " does not increase past " +
                            std::to_string(previous_index));
    }
    previous_index = index;
    have_previous = true;
    result.entries.emplace_back(index, std::move(value));
  }
  return result;
}

BFile parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

void write_bfile(std::ostream& out, const BFile& bfile) {
  for (const auto& [index, value] : bfile.entries) {
    out << index << ' ' << value.get_str() << '\n';
  }
}

}  // namespace homcount::bfile
