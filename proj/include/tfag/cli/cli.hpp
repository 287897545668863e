#pragma once

#include "tfag/exact/matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tfag::cli {

// Bad command line or unparsable payload; exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Payload tree. Leaves are exact rationals; lists and objects nest.
/// Accepts JSON plus bare rational tokens such as [1/3, -2/5].
struct Value {
  using List = std::vector<Value>;
  using Object = std::vector<std::pair<std::string, Value>>;
  std::variant<Rational, List, Object> node;

  bool is_number() const { return std::holds_alternative<Rational>(node); }
  bool is_list() const { return std::holds_alternative<List>(node); }
  bool is_object() const { return std::holds_alternative<Object>(node); }
  const Rational& number() const;
  const List& list() const;
  const Value& at(std::string_view key) const;
};

Value parse_payload(std::string_view text);

Integer as_integer(const Value& v);
IntVector as_int_vector(const Value& v);
RatVector as_rat_vector(const Value& v);
IntMatrix as_int_matrix(const Value& v);
RatMatrix as_rat_matrix(const Value& v);
std::vector<IntMatrix> as_matrix_list(const Value& v);

/// Default precision: TFAG_PRECISION if set and valid, else 64.
long default_precision();

/// 3 for PrecisionError, 1 for every other library error.
int exit_code(const Error& e);

/// Runs one command line (argv without the program name). Writes a single
/// JSON document to `out` and diagnostics to `err`. Exit codes: 0 success,
/// 1 domain error, 2 usage error, 3 precision too low.
/// `batch` reads one JSON array of arguments per line from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tfag::cli
