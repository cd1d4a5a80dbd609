#include "solvco/structure_file.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"

namespace solvco {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Cursor over one right-hand side.
class Scanner {
 public:
  Scanner(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string_view take_while(bool (*pred)(char)) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && pred(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Rational rational() {
    skip_space();
    auto tok = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '/'; });
    try {
      return parse_rational(tok);
    } catch (const InputError& e) {
      fail(e.what());
    }
  }

  /// e<digits>, returned 1-based.
  std::size_t generator() {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != 'e') fail("expected a generator like e1");
    ++pos_;
    auto digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (digits.empty() || digits.size() > 6) fail("expected a generator index after 'e'");
    return std::stoul(std::string(digits));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, msg + " (at column " + std::to_string(pos_ + 1) + " of the right-hand side)");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct Term {
  Rational coef;
  std::size_t i, j;  // 1-based
};

std::vector<Term> parse_rhs(std::string_view rhs, std::size_t line, std::size_t dim) {
  std::vector<Term> terms;
  Scanner sc(rhs, line);
  if (trim(rhs) == "0") return terms;
  if (sc.done()) sc.fail("empty right-hand side (write 0 for a closed generator)");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected + or - between terms");
    first = false;
    Rational coef = 1;
    if (sc.peek_digit()) {
      coef = sc.rational();
      sc.accept('*');
    }
    const std::size_t i = sc.generator();
    if (!sc.accept('^')) sc.fail("expected ^ between generators");
    const std::size_t j = sc.generator();
    if (i < 1 || j > dim) sc.fail("generator index out of range 1.." + std::to_string(dim));
    if (i >= j) sc.fail("indices must be increasing in e" + std::to_string(i) + "^e" + std::to_string(j));
    terms.push_back(Term{sign * coef, i, j});
  }
  return terms;
}

}  // namespace

LieAlgebra parse_structure_file(std::string_view text, bool check) {
  std::optional<std::size_t> dim;
  std::map<std::size_t, std::vector<Term>> equations;
  std::map<std::size_t, std::size_t> defined_on;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!dim) {
      if (line.substr(0, 3) != "dim" || line.size() < 4 || !std::isspace(static_cast<unsigned char>(line[3])))
        throw ParseError(line_no, "expected `dim N` before any equation");
      const std::string_view num = trim(line.substr(3));
      std::size_t n = 0;
      try {
        const Rational r = parse_rational(num);
        if (!is_integer(r) || r < 1 || r > 64) throw InputError("bad dimension");
        n = r.get_num().get_ui();
      } catch (const InputError&) {
        throw ParseError(line_no, "dimension must be an integer between 1 and 64");
      }
      dim = n;
      continue;
    }

    if (line.size() < 2 || line[0] != 'd' || !std::isspace(static_cast<unsigned char>(line[1])))
      throw ParseError(line_no, "expected an equation `d e<k> = ...`");
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "missing '='");
    Scanner lhs(line.substr(1, eq - 1), line_no);
    const std::size_t k = lhs.generator();
    if (!lhs.done()) lhs.fail("unexpected text before '='");
    if (k < 1 || k > *dim) throw ParseError(line_no, "generator e" + std::to_string(k) + " out of range");
    if (auto prev = defined_on.find(k); prev != defined_on.end())
      throw ParseError(line_no, "d e" + std::to_string(k) + " already given on line " + std::to_string(prev->second));
    defined_on[k] = line_no;

    auto terms = parse_rhs(line.substr(eq + 1), line_no, *dim);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& t : terms)
      if (!seen.insert({t.i, t.j}).second)
        throw ParseError(line_no, "duplicate term e" + std::to_string(t.i) + "^e" + std::to_string(t.j));
    equations[k] = std::move(terms);
  }
  if (!dim) throw ParseError(line_no == 0 ? 1 : line_no, "missing `dim N` line");

  const std::size_t n = *dim;
  std::vector<Rational> tensor(n * n * n);
  for (const auto& [k, terms] : equations)
    for (const auto& t : terms) {
      tensor[((k - 1) * n + (t.i - 1)) * n + (t.j - 1)] = -t.coef;
      tensor[((k - 1) * n + (t.j - 1)) * n + (t.i - 1)] = t.coef;
    }
  LieAlgebra g = LieAlgebra::from_tensor(n, std::move(tensor));
  if (check) require_valid(g);
  return g;
}

std::string dump_structure(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::ostringstream os;
  os << "dim " << n << "\n";
  for (std::size_t k = 0; k < n; ++k) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational coef = -g.c(k, i, j);
        if (coef == 0) continue;
        const Rational mag = abs(coef);
        if (rhs.empty())
          rhs += coef < 0 ? "-" : "";
        else
          rhs += coef < 0 ? " - " : " + ";
        if (mag != 1) rhs += to_string(mag) + " ";
        rhs += "e" + std::to_string(i + 1) + "^e" + std::to_string(j + 1);
      }
    if (!rhs.empty()) os << "d e" << (k + 1) << " = " << rhs << "\n";
  }
  return os.str();
}

}  // namespace solvco
