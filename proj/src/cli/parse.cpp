#include "tfag/cli/cli.hpp"

#include <cctype>
#include <cstdlib>

namespace tfag::cli {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Value document() {
    Value v = value();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("payload parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '[') return list();
    if (c == '{') return object();
    if (c == '"') return Value{number_text(quoted())};
    return Value{number_text(bare())};
  }

  Value list() {
    ++pos_;
    Value::List items;
    if (eat(']')) return Value{std::move(items)};
    do items.push_back(value());
    while (eat(','));
    if (!eat(']')) fail("expected ',' or ']'");
    return Value{std::move(items)};
  }

  Value object() {
    ++pos_;
    Value::Object fields;
    if (eat('}')) return Value{std::move(fields)};
    do {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected a quoted key");
      std::string key = quoted();
      if (!eat(':')) fail("expected ':'");
      fields.emplace_back(std::move(key), value());
    } while (eat(','));
    if (!eat('}')) fail("expected ',' or '}'");
    return Value{std::move(fields)};
  }

  std::string quoted() {
    ++pos_;
    std::size_t end = s_.find('"', pos_);
    if (end == std::string_view::npos) fail("unterminated string");
    std::string out(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }

  std::string bare() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                s_[pos_] == '+' || s_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational number_text(const std::string& text) const {
    try {
      return Rational::parse(text);
    } catch (const std::exception&) {
      fail("'" + text + "' is not an integer or a/b rational");
    }
  }
};

} // namespace

const Rational& Value::number() const {
  if (!is_number()) throw UsageError("expected a number");
  return std::get<Rational>(node);
}

const Value::List& Value::list() const {
  if (!is_list()) throw UsageError("expected a list");
  return std::get<List>(node);
}

const Value& Value::at(std::string_view key) const {
  if (!is_object()) throw UsageError("expected an object");
  for (const auto& [k, v] : std::get<Object>(node))
    if (k == key) return v;
  throw UsageError("missing key '" + std::string(key) + "'");
}

Value parse_payload(std::string_view text) { return Parser(text).document(); }

Integer as_integer(const Value& v) {
  const Rational& q = v.number();
  if (!q.is_integer()) throw UsageError("expected an integer, got " + q.to_string());
  return q.num();
}

IntVector as_int_vector(const Value& v) {
  IntVector out;
  for (const auto& x : v.list()) out.push_back(as_integer(x));
  return out;
}

RatVector as_rat_vector(const Value& v) {
  RatVector out;
  for (const auto& x : v.list()) out.push_back(x.number());
  return out;
}

IntMatrix as_int_matrix(const Value& v) {
  std::vector<IntVector> rows;
  for (const auto& r : v.list()) rows.push_back(as_int_vector(r));
  if (rows.empty()) throw UsageError("empty matrix");
  return IntMatrix::from_rows(rows);
}

RatMatrix as_rat_matrix(const Value& v) {
  std::vector<RatVector> rows;
  for (const auto& r : v.list()) rows.push_back(as_rat_vector(r));
  if (rows.empty()) throw UsageError("empty matrix");
  return RatMatrix::from_rows(rows);
}

std::vector<IntMatrix> as_matrix_list(const Value& v) {
  std::vector<IntMatrix> out;
  for (const auto& m : v.list()) out.push_back(as_int_matrix(m));
  return out;
}

long default_precision() {
  const char* env = std::getenv("TFAG_PRECISION");
  if (env == nullptr) return 64;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1 || n > 4096) return 64;
  return n;
}

} // namespace tfag::cli
