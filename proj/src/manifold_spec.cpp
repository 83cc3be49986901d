#include "shl/manifold_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace shl {

namespace {

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "' near '" + rest() + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  /// Unsigned rational `p` or `p/q`; empty optional if no digits follow.
  std::optional<Rational> unsigned_rational() {
    std::string num = digits();
    if (num.empty()) return std::nullopt;
    std::string text = num;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) throw SyntaxError("malformed rational '" + num + "/'");
      text += "/" + den;
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(e.what());
    }
  }
  Rational signed_rational() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    auto q = unsigned_rational();
    if (!q) throw SyntaxError("expected a rational number near '" + rest() + "'");
    return negative ? Rational(-*q) : *q;
  }
  std::string rest() const { return std::string(s_.substr(std::min(pos_, s_.size()))); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Sorted multi-index and permutation sign for an index string like "42".
std::pair<MultiIndex, int> index_from_digits(const std::string& digits, int dim) {
  if (digits.empty()) throw SyntaxError("missing coframe indices");
  std::vector<int> idx;
  for (char c : digits) {
    int i = c - '0';
    if (i < 1 || i > dim) throw SyntaxError("coframe index " + std::string(1, c) + " outside 1.." + std::to_string(dim));
    idx.push_back(i);
  }
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) throw SyntaxError("repeated coframe index in '" + digits + "'");
      if (idx[a] > idx[b]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  return {MultiIndex::from_indices(idx), sign};
}

/// Sum of signed terms; `basis_term` parses the part after the coefficient.
template <typename TermFn>
Form parse_sum(Cursor& cur, int dim, int degree, TermFn basis_term) {
  Form f(dim, degree);
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.digits();
    if (probe.at_end() || probe.peek() == ',' || probe.peek() == ')') {
      cur = probe;
      return f;
    }
  }
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (!cur.accept('+') && !first)
      break;
    first = false;
    auto [coefficient, index] = basis_term(cur);
    f.add_term(index.first, Rational(coefficient * (sign * index.second)));
  }
  return f;
}

Form parse_form_expr(Cursor& cur, int dim, int degree) {
  return parse_sum(cur, dim, degree, [&](Cursor& c) {
    Rational coefficient = c.unsigned_rational().value_or(Rational(1));
    c.accept('*');
    if (!c.accept('e')) throw SyntaxError("expected a basis form 'e<indices>' near '" + c.rest() + "'");
    auto index = index_from_digits(c.digits(), dim);
    if (index.first.degree() != degree)
      throw SyntaxError("term has degree " + std::to_string(index.first.degree()) + ", expected " +
                        std::to_string(degree));
    return std::make_pair(coefficient, index);
  });
}

/// Salamon entry such as `0`, `12`, `13+24`, `-2*14`, `1/2*23`.
Form parse_salamon_entry(Cursor& cur, int dim) {
  return parse_sum(cur, dim, 2, [&](Cursor& c) {
    Rational coefficient = 1;
    std::string indices;
    auto leading = c.unsigned_rational();
    if (!leading) throw SyntaxError("expected structure term near '" + c.rest() + "'");
    if (c.accept('*')) {
      coefficient = *leading;
      indices = c.digits();
    } else {
      if (leading->get_den() != 1) throw SyntaxError("rational coefficient must be followed by '*'");
      indices = leading->get_num().get_str();
    }
    if (indices.size() != 2) throw SyntaxError("structure term '" + indices + "' must be two coframe indices");
    return std::make_pair(coefficient, index_from_digits(indices, dim));
  });
}

MatrixQ parse_rows(Cursor& cur, std::size_t n) {
  if (!cur.accept_word("rows")) throw SyntaxError("expected 'rows [ [..], .. ]'");
  cur.expect('[');
  std::vector<VectorQ> rows;
  do {
    cur.expect('[');
    VectorQ row;
    do row.push_back(cur.signed_rational());
    while (cur.accept(','));
    cur.expect(']');
    rows.push_back(std::move(row));
  } while (cur.accept(','));
  cur.expect(']');
  if (rows.size() != n) throw SyntaxError("matrix must have " + std::to_string(n) + " rows");
  MatrixQ m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw SyntaxError("matrix row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

struct Declaration {
  int line;
  std::string value;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Form parse_form(std::string_view text, int dim, int degree) {
  Cursor cur(text);
  try {
    Form f = parse_form_expr(cur, dim, degree);
    if (!cur.at_end()) throw SyntaxError("unexpected trailing text '" + cur.rest() + "'");
    return f;
  } catch (const SyntaxError& e) {
    throw ParseError(0, e.what());
  }
}

ManifoldSpec parse_model(std::string_view text) {
  std::map<std::string, Declaration> decls;
  std::map<int, Declaration> d_lines;
  int first_d_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");

    if (key.size() >= 2 && key[0] == 'd' && std::isspace(static_cast<unsigned char>(key[1]))) {
      std::string target = trim(std::string_view(key).substr(1));
      if (target.size() != 2 || target[0] != 'e' || !std::isdigit(static_cast<unsigned char>(target[1])))
        throw ParseError(line_no, "malformed differential declaration '" + key + "', expected 'd e<m>'");
      int m = target[1] - '0';
      if (d_lines.count(m)) throw ParseError(line_no, "duplicate declaration of d e" + std::to_string(m));
      d_lines[m] = {line_no, value};
      if (!first_d_line) first_d_line = line_no;
      continue;
    }
    static const char* kKeys[] = {"dim", "structure", "omega", "J", "metric"};
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw ParseError(line_no, "unknown declaration '" + key + "'");
    if (decls.count(key)) throw ParseError(line_no, "duplicate declaration of '" + key + "'");
    decls[key] = {line_no, value};
  }

  auto dim_it = decls.find("dim");
  if (dim_it == decls.end()) throw ParseError(0, "missing required declaration 'dim'");
  const int dim_line = dim_it->second.line;
  int dim = 0;
  {
    const std::string& v = dim_it->second.value;
    if (v.empty() || v.size() > 2 || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(dim_line, "dim must be a positive integer");
    dim = std::stoi(v);
  }
  if (dim % 2 != 0) throw ParseError(dim_line, "odd dimension " + std::to_string(dim) + " (must be even)");
  if (dim < 2 || dim > kMaxDimension) throw ParseError(dim_line, "dimension " + std::to_string(dim) + " out of supported range 2..8");

  auto structure_it = decls.find("structure");
  if (structure_it != decls.end() && !d_lines.empty())
    throw ParseError(structure_it->second.line, "use either 'structure' or explicit 'd e<m>' lines, not both");

  std::vector<Form> d_on_coframe;
  for (int m = 0; m < dim; ++m) d_on_coframe.emplace_back(dim, 2);
  int model_line = 0;
  if (structure_it != decls.end()) {
    model_line = structure_it->second.line;
    Cursor cur(structure_it->second.value);
    try {
      cur.expect('(');
      int m = 0;
      do {
        if (m == dim) throw SyntaxError("structure has more than " + std::to_string(dim) + " entries");
        d_on_coframe[static_cast<std::size_t>(m++)] = parse_salamon_entry(cur, dim);
      } while (cur.accept(','));
      cur.expect(')');
      if (!cur.at_end()) throw SyntaxError("unexpected trailing text '" + cur.rest() + "'");
      if (m != dim) throw SyntaxError("structure has " + std::to_string(m) + " entries, expected " + std::to_string(dim));
    } catch (const SyntaxError& e) {
      throw ParseError(model_line, e.what());
    }
  } else {
    model_line = first_d_line;
    for (const auto& [m, decl] : d_lines) {
      if (m < 1 || m > dim) throw ParseError(decl.line, "d e" + std::to_string(m) + " outside coframe 1.." + std::to_string(dim));
      try {
        d_on_coframe[static_cast<std::size_t>(m - 1)] = parse_form(decl.value, dim, 2);
      } catch (const ParseError& e) {
        throw ParseError(decl.line, e.what());
      }
    }
  }

  auto parse_value = [&](const std::string& key, auto fn) {
    const auto& decl = decls.at(key);
    try {
      return fn(decl.value);
    } catch (const SyntaxError& e) {
      throw ParseError(decl.line, e.what());
    } catch (const ParseError& e) {
      throw ParseError(decl.line, e.what());
    }
  };

  ManifoldSpec spec;
  try {
    spec.model = LieModel(dim, d_on_coframe);
  } catch (const ModelError& e) {
    throw ParseError(model_line, e.what());
  }

  if (!decls.count("omega")) throw ParseError(0, "missing required declaration 'omega'");
  spec.omega = parse_value("omega", [&](const std::string& v) { return parse_form(v, dim, 2); });

  const auto n = static_cast<std::size_t>(dim);
  if (decls.count("J")) {
    spec.J = parse_value("J", [&](const std::string& v) {
      Cursor cur(v);
      MatrixQ j = parse_rows(cur, n);
      if (!cur.at_end()) throw SyntaxError("unexpected trailing text '" + cur.rest() + "'");
      return j;
    });
  }
  spec.metric = MatrixQ::identity(n);
  if (decls.count("metric")) {
    spec.metric = parse_value("metric", [&](const std::string& v) {
      Cursor cur(v);
      if (cur.accept_word("identity")) {
        if (!cur.at_end()) throw SyntaxError("unexpected trailing text '" + cur.rest() + "'");
        return MatrixQ::identity(n);
      }
      MatrixQ g = parse_rows(cur, n);
      if (!cur.at_end()) throw SyntaxError("unexpected trailing text '" + cur.rest() + "'");
      return g;
    });
  }
  return spec;
}

namespace {

std::string print_rows(const MatrixQ& m) {
  std::ostringstream os;
  os << "rows [ ";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << to_string(m(r, c));
    os << ']';
  }
  os << " ]";
  return os.str();
}

}  // namespace

std::string print_model(const ManifoldSpec& spec) {
  std::ostringstream os;
  const int dim = spec.model.dim();
  os << "dim = " << dim << '\n';
  for (int m = 0; m < dim; ++m) {
    const Form& f = spec.model.d_on_coframe()[static_cast<std::size_t>(m)];
    if (!f.is_zero()) os << "d e" << (m + 1) << " = " << to_string(f) << '\n';
  }
  os << "omega = " << to_string(spec.omega) << '\n';
  if (spec.J) os << "J = " << print_rows(*spec.J) << '\n';
  if (spec.metric == MatrixQ::identity(static_cast<std::size_t>(dim)))
    os << "metric = identity\n";
  else
    os << "metric = " << print_rows(spec.metric) << '\n';
  return os.str();
}

}  // namespace shl
