#include "vnca/rule_table.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "vnca/bigint.hpp"

namespace vnca {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

// Digits of `word` in base q, most significant first, into out[0..len).
void word_digits(std::size_t word, unsigned q, int len, std::uint8_t* out) {
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(word % q);
    word /= q;
  }
}

std::size_t word_value(const std::uint8_t* digits, unsigned q, int len) {
  std::size_t v = 0;
  for (int i = 0; i < len; ++i) v = v * q + digits[i];
  return v;
}

void require_same_alphabet(unsigned a, unsigned b) {
  if (a != b) throw std::invalid_argument("alphabet size mismatch");
}

}  // namespace

std::size_t checked_table_size(unsigned alphabet, int window_length) {
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (window_length < 1) throw std::invalid_argument("window length must be at least 1");
  std::size_t size = 1;
  for (int i = 0; i < window_length; ++i) {
    if (size > kMaxTableSize / alphabet) throw std::invalid_argument("rule table too large");
    size *= alphabet;
  }
  return size;
}

RuleTable::RuleTable(unsigned alphabet, int left, int right, std::vector<std::uint8_t> table)
    : alphabet_(alphabet), left_(left), right_(right), table_(std::move(table)) {
  if (left_ < 0 || right_ < 0) throw std::invalid_argument("window bounds must be nonnegative");
  const std::size_t expected = checked_table_size(alphabet_, window_length());
  if (table_.size() != expected) throw std::invalid_argument("rule table has wrong size");
  for (std::uint8_t s : table_) {
    if (s >= alphabet_) throw std::invalid_argument("rule table symbol out of range");
  }
}

RuleTable wolfram_rule(unsigned number) {
  if (number > 255) throw std::invalid_argument("Wolfram number out of range");
  std::vector<std::uint8_t> table(8);
  for (std::size_t w = 0; w < 8; ++w) table[w] = (number >> w) & 1u;
  return RuleTable(2, 1, 1, std::move(table));
}

namespace {

unsigned radius1_number(const RuleTable& r) {
  unsigned number = 0;
  std::uint8_t digits[3];
  for (std::size_t w = 0; w < 8; ++w) {
    word_digits(w, 2, 3, digits);
    const int offset = 1 - r.left();
    const std::size_t sub = word_value(digits + offset, 2, r.window_length());
    number |= static_cast<unsigned>(r.output(sub)) << w;
  }
  return number;
}

}  // namespace

std::optional<unsigned> wolfram_number(const RuleTable& rule) {
  if (rule.alphabet() != 2) return std::nullopt;
  if (rule.left() == 1 && rule.right() == 1) return radius1_number(rule);
  const RuleTable reduced = minimal_memory(rule);
  if (reduced.left() > 1 || reduced.right() > 1) return std::nullopt;
  return radius1_number(reduced);
}

PeriodicConfig apply(const RuleTable& rule, const PeriodicConfig& x) {
  require_same_alphabet(rule.alphabet(), x.alphabet());
  const std::size_t p = x.period();
  const unsigned q = rule.alphabet();
  const int len = rule.window_length();
  std::vector<std::uint8_t> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t word = 0;
    for (int j = 0; j < len; ++j) {
      word = word * q + x.cell(static_cast<long long>(i) - rule.left() + j);
    }
    out[i] = rule.output(word);
  }
  return PeriodicConfig(q, std::move(out));
}

RuleTable compose(const RuleTable& a, const RuleTable& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const unsigned q = a.alphabet();
  const int left = a.left() + b.left();
  const int right = a.right() + b.right();
  const int len = left + right + 1;
  const std::size_t size = checked_table_size(q, len);
  const int a_len = a.window_length();
  const int b_len = b.window_length();

  std::vector<std::uint8_t> table(size);
  std::vector<std::uint8_t> digits(len), mid(b_len);
  for (std::size_t w = 0; w < size; ++w) {
    word_digits(w, q, len, digits.data());
    for (int j = 0; j < b_len; ++j) {
      mid[j] = a.output(word_value(digits.data() + j, q, a_len));
    }
    table[w] = b.output(word_value(mid.data(), q, b_len));
  }
  return RuleTable(q, left, right, std::move(table));
}

RuleTable minimal_memory(const RuleTable& rule) {
  const unsigned q = rule.alphabet();
  const int len = rule.window_length();
  const std::size_t size = rule.table_size();

  std::vector<bool> essential(len, false);
  for (int pos = 0; pos < len; ++pos) {
    std::size_t stride = 1;
    for (int i = 0; i < len - 1 - pos; ++i) stride *= q;
    for (std::size_t w = 0; w < size && !essential[pos]; ++w) {
      if ((w / stride) % q != 0) continue;
      const std::uint8_t base = rule.output(w);
      for (unsigned s = 1; s < q; ++s) {
        if (rule.output(w + s * stride) != base) {
          essential[pos] = true;
          break;
        }
      }
    }
  }

  // Keep the interval spanned by the essential coordinates, clamped to
  // contain the centre cell (window bounds stay nonnegative).
  int first = rule.left(), last = rule.left();
  bool any = false;
  for (int pos = 0; pos < len; ++pos) {
    if (!essential[pos]) continue;
    if (!any) first = pos;
    last = pos;
    any = true;
  }
  first = std::min(first, rule.left());
  last = std::max(last, rule.left());

  const int new_left = rule.left() - first;
  const int new_right = last - rule.left();
  const int new_len = new_left + new_right + 1;
  if (new_len == len) return rule;

  const std::size_t new_size = checked_table_size(q, new_len);
  std::vector<std::uint8_t> table(new_size);
  std::vector<std::uint8_t> digits(len, 0), sub(new_len);
  for (std::size_t w = 0; w < new_size; ++w) {
    word_digits(w, q, new_len, sub.data());
    std::fill(digits.begin(), digits.end(), 0);
    std::copy(sub.begin(), sub.end(), digits.begin() + first);
    table[w] = rule.output(word_value(digits.data(), q, len));
  }
  return RuleTable(q, new_left, new_right, std::move(table));
}

bool rules_equal(const RuleTable& a, const RuleTable& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const unsigned q = a.alphabet();
  const int left = std::max(a.left(), b.left());
  const int right = std::max(a.right(), b.right());
  const int len = left + right + 1;
  const std::size_t size = checked_table_size(q, len);
  const int a_off = left - a.left();
  const int b_off = left - b.left();
  std::vector<std::uint8_t> digits(len);
  for (std::size_t w = 0; w < size; ++w) {
    word_digits(w, q, len, digits.data());
    const std::uint8_t va = a.output(word_value(digits.data() + a_off, q, a.window_length()));
    const std::uint8_t vb = b.output(word_value(digits.data() + b_off, q, b.window_length()));
    if (va != vb) return false;
  }
  return true;
}

RuleTable mirror(const RuleTable& rule) {
  const unsigned q = rule.alphabet();
  const int len = rule.window_length();
  std::vector<std::uint8_t> table(rule.table_size());
  std::vector<std::uint8_t> digits(len);
  for (std::size_t w = 0; w < table.size(); ++w) {
    word_digits(w, q, len, digits.data());
    std::reverse(digits.begin(), digits.end());
    table[w] = rule.output(word_value(digits.data(), q, len));
  }
  return RuleTable(q, rule.right(), rule.left(), std::move(table));
}

RuleTable complement_left(const RuleTable& rule) {
  if (rule.alphabet() != 2) throw std::invalid_argument("complement requires a binary alphabet");
  const std::size_t size = rule.table_size();
  std::vector<std::uint8_t> table(size);
  for (std::size_t w = 0; w < size; ++w) table[w] = rule.output(size - 1 - w);
  return RuleTable(2, rule.left(), rule.right(), std::move(table));
}

RuleTable complement_right(const RuleTable& rule) {
  if (rule.alphabet() != 2) throw std::invalid_argument("complement requires a binary alphabet");
  std::vector<std::uint8_t> table(rule.table_size());
  for (std::size_t w = 0; w < table.size(); ++w) table[w] = 1 - rule.output(w);
  return RuleTable(2, rule.left(), rule.right(), std::move(table));
}

std::string rule_literal(const RuleTable& rule) {
  if (rule.alphabet() == 2 && rule.left() == 1 && rule.right() == 1) {
    unsigned number = 0;
    for (std::size_t w = 0; w < 8; ++w) number |= static_cast<unsigned>(rule.output(w)) << w;
    return "eca:" + std::to_string(number);
  }
  BigInt packed = 0;
  for (std::size_t i = rule.table_size(); i-- > 0;) {
    packed *= rule.alphabet();
    packed += rule.output(i);
  }
  std::ostringstream out;
  out << "table:q=" << rule.alphabet() << ",l=" << rule.left() << ",r=" << rule.right()
      << ",hex=" << std::hex << packed;
  return out.str();
}

namespace {

unsigned parse_uint(const std::string& text, unsigned max_value, const char* what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument(std::string("invalid ") + what + " in rule literal");
  }
  const unsigned long v = std::stoul(text);
  if (v > max_value) throw std::invalid_argument(std::string(what) + " out of range in rule literal");
  return static_cast<unsigned>(v);
}

std::string expect_field(const std::string& part, const std::string& key) {
  if (part.size() <= key.size() || part.compare(0, key.size(), key) != 0 || part[key.size()] != '=') {
    throw std::invalid_argument("malformed rule literal field, expected " + key + "=...");
  }
  return part.substr(key.size() + 1);
}

}  // namespace

RuleTable parse_rule_literal(const std::string& text) {
  if (text.rfind("eca:", 0) == 0) {
    return wolfram_rule(parse_uint(text.substr(4), 255, "Wolfram number"));
  }
  if (text.rfind("table:", 0) != 0) {
    throw std::invalid_argument("rule literal must start with eca: or table:");
  }
  std::vector<std::string> parts;
  std::string rest = text.substr(6);
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    const std::size_t comma = rest.find(',', pos);
    parts.push_back(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? std::string::npos : comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("rule literal needs q, l, r and hex fields");

  const unsigned q = parse_uint(expect_field(parts[0], "q"), 1u << 15, "alphabet");
  const unsigned l = parse_uint(expect_field(parts[1], "l"), 32, "left bound");
  const unsigned r = parse_uint(expect_field(parts[2], "r"), 32, "right bound");
  const std::string hex = expect_field(parts[3], "hex");
  if (hex.empty() || !std::all_of(hex.begin(), hex.end(), [](char c) {
        return std::isxdigit(static_cast<unsigned char>(c));
      })) {
    throw std::invalid_argument("invalid hex digits in rule literal");
  }

  const std::size_t size = checked_table_size(q, static_cast<int>(l + r + 1));
  BigInt packed("0x" + hex);
  std::vector<std::uint8_t> table(size);
  for (std::size_t w = 0; w < size; ++w) {
    table[w] = static_cast<std::uint8_t>(packed % q);
    packed /= q;
  }
  if (packed != 0) throw std::invalid_argument("hex value larger than the rule table");
  return RuleTable(q, static_cast<int>(l), static_cast<int>(r), std::move(table));
}

}  // namespace vnca
