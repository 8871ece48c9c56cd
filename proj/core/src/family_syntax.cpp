#include <cctype>
#include <charconv>
#include <sstream>

#include "revwiener/error.hpp"
#include "revwiener/families.hpp"

namespace revwiener {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::int64_t number() {
    skip_space();
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance_to_end() { pos_ = text_.size(); }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SpecParseError,
         what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t positive_size(Cursor& c, std::int64_t value) {
  if (value < 1) c.error("vertex count must be positive");
  return static_cast<std::size_t>(value);
}

// Accepts "n0=2; 1^3, 2" as well as the bare "2; 1^3, 2", and "^[3]" for
// "^3". A missing multiplicity means 1.
Diam4Spec parse_diam4(Cursor& c) {
  std::int64_t n0 = 0;
  bool have_n0 = false;
  if (c.accept("n0")) {
    c.expect('=');
    n0 = c.number();
    c.expect(';');
    have_n0 = true;
  }
  std::vector<RawPart> parts;
  do {
    RawPart part;
    part.value = c.number();
    if (!have_n0 && parts.empty() && c.accept(';')) {
      n0 = part.value;
      have_n0 = true;
      part.value = c.number();
    }
    part.multiplicity = 1;
    if (c.accept('^')) {
      const bool bracket = c.accept('[');
      part.multiplicity = c.number();
      if (bracket) c.expect(']');
    }
    parts.push_back(part);
  } while (c.accept(','));
  c.expect(')');
  return normalize(n0, parts);
}

}  // namespace

std::string to_string(const TreeDescriptor& d) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, StarSpec>) {
          out << "S(" << spec.n << ")";
        } else if constexpr (std::is_same_v<T, PathSpec>) {
          out << "P(" << spec.n << ")";
        } else if constexpr (std::is_same_v<T, DoubleStarSpec>) {
          out << "D(" << spec.n << "," << spec.a << ")";
        } else if constexpr (std::is_same_v<T, Diam4Spec>) {
          out << "T(";
          if (spec.n0 > 0) out << "n0=" << spec.n0 << "; ";
          for (std::size_t i = 0; i < spec.parts.size(); ++i) {
            if (i > 0) out << ", ";
            out << spec.parts[i].value << "^" << spec.parts[i].multiplicity;
          }
          out << ")";
        } else {
          out << "C(" << spec.str() << ")";
        }
      },
      d);
  return out.str();
}

TreeDescriptor parse_descriptor(std::string_view text) {
  Cursor c(text);
  const char family = c.peek();
  if (family == '\0') c.error("empty family spec");
  c.accept(family);
  c.expect('(');
  TreeDescriptor result;
  switch (family) {
    case 'S':
      result = StarSpec{positive_size(c, c.number())};
      c.expect(')');
      break;
    case 'P':
      result = PathSpec{positive_size(c, c.number())};
      c.expect(')');
      break;
    case 'D': {
      DoubleStarSpec spec;
      spec.n = positive_size(c, c.number());
      c.expect(',');
      const std::int64_t a = c.number();
      c.expect(')');
      if (a < 0) fail(ErrorCode::InvalidSpec, "negative a");
      spec.a = static_cast<std::size_t>(a);
      validate(spec);
      result = spec;
      break;
    }
    case 'T':
      result = parse_diam4(c);
      break;
    case 'C': {
      // The code itself is parenthesised: everything up to the final ')'.
      std::string_view body = c.rest();
      while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
        body.remove_suffix(1);
      }
      if (body.empty() || body.back() != ')') c.error("expected ')'");
      body.remove_suffix(1);
      CanonicalCode code{std::string(body)};
      try {
        result = canonical_code(tree_from_code(code));
      } catch (const Error& e) {
        fail(ErrorCode::SpecParseError, e.what());
      }
      c.advance_to_end();
      break;
    }
    default:
      c.error(std::string("unknown family '") + family + "'");
  }
  if (!c.done()) c.error("trailing characters");
  return result;
}

}  // namespace revwiener
