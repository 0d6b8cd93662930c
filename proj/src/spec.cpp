#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qtilt/cli.hpp"

namespace qtilt {

namespace {

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''; }

class LineLexer {
 public:
  LineLexer(std::string_view s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw SpecError(line_, column(), msg); }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek_arrow_token() {
    skip_ws();
    return s_.substr(pos_, 2) == "->";
  }
  std::string label(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_label_char(s_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string rest() {
    skip_ws();
    std::string r(s_.substr(pos_));
    pos_ = s_.size();
    while (!r.empty() && (r.back() == ' ' || r.back() == '\t' || r.back() == '\r')) r.pop_back();
    return r;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  std::string_view text() const { return s_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

AlgebraSpec::Relation parse_relation(LineLexer& lx) {
  AlgebraSpec::Relation rel;
  bool first = true;
  while (true) {
    std::int64_t sign = 1;
    if (lx.peek('+') || lx.peek('-')) {
      sign = lx.peek('-') ? -1 : 1;
      lx.expect(lx.peek('-') ? '-' : '+');
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    if (lx.at_end()) lx.fail("expected a term");
    AlgebraSpec::Term term;
    term.coeff = sign;
    std::string tok = lx.label("coefficient or arrow label");
    if (all_digits(tok)) {
      std::int64_t c = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), c);
      if (ec != std::errc() || p != tok.data() + tok.size()) lx.fail("coefficient out of range");
      term.coeff = sign * c;
      lx.expect('*');
      tok = lx.label("arrow label after '*'");
      if (all_digits(tok)) lx.fail("expected an arrow label, got a number");
    }
    term.arrows.push_back(tok);
    while (lx.peek('*')) {
      lx.expect('*');
      tok = lx.label("arrow label after '*'");
      if (all_digits(tok)) lx.fail("expected an arrow label, got a number");
      term.arrows.push_back(tok);
    }
    rel.push_back(std::move(term));
    first = false;
    if (lx.at_end()) break;
  }
  return rel;
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  AlgebraSpec spec;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool field_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    LineLexer lx(line, line_no);
    if (lx.at_end()) continue;
    std::string kw = lx.label("keyword");
    if (kw == "field") {
      if (field_seen) lx.fail("field declared twice");
      lx.expect('=');
      std::string f = lx.label("field name");
      if (f == "Q") {
        spec.field = "Q";
      } else if (f == "Fp") {
        std::string p = lx.label("prime");
        if (!all_digits(p)) lx.fail("expected a prime number");
        spec.field = "Fp " + p;
        try {
          Field::parse(spec.field);
        } catch (const Error& e) {
          lx.fail(e.what());
        }
      } else {
        lx.fail("expected Q or Fp");
      }
      field_seen = true;
    } else if (kw == "vertex") {
      std::string v = lx.label("vertex label");
      for (const auto& w : spec.vertices)
        if (w == v) lx.fail("duplicate vertex '" + v + "'");
      spec.vertices.push_back(v);
    } else if (kw == "arrow") {
      std::size_t at = lx.pos();
      std::string a = lx.label("arrow label");
      if (all_digits(a)) {
        lx.set_pos(at);
        lx.skip_ws();
        lx.fail("arrow labels must not be numbers");
      }
      lx.expect(':');
      std::string s = lx.label("source vertex");
      if (!lx.peek_arrow_token()) lx.fail("expected '->'");
      lx.expect('-');
      lx.expect('>');
      std::string t = lx.label("target vertex");
      for (const auto& [lbl, where] : {std::pair{s, "source"}, std::pair{t, "target"}})
        if (std::find(spec.vertices.begin(), spec.vertices.end(), lbl) == spec.vertices.end())
          lx.fail(std::string("unknown ") + where + " vertex '" + lbl + "'");
      for (const auto& d : spec.arrows)
        if (d.label == a) lx.fail("duplicate arrow '" + a + "'");
      spec.arrows.push_back({a, s, t});
    } else if (kw == "relation") {
      std::size_t start = lx.pos();
      auto rel = parse_relation(lx);
      // Semantic checks: known arrows, composable terms, shared endpoints.
      auto find_arrow = [&](const std::string& l) -> const AlgebraSpec::ArrowDecl* {
        for (const auto& d : spec.arrows)
          if (d.label == l) return &d;
        return nullptr;
      };
      std::string src, tgt;
      for (std::size_t k = 0; k < rel.size(); ++k) {
        const auto& term = rel[k];
        for (const auto& l : term.arrows)
          if (!find_arrow(l)) throw SpecError(line_no, static_cast<int>(start) + 1, "unknown arrow '" + l + "'");
        for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i)
          if (find_arrow(term.arrows[i])->target != find_arrow(term.arrows[i + 1])->source)
            throw SpecError(line_no, static_cast<int>(start) + 1,
                            "path " + term.arrows[i] + "*" + term.arrows[i + 1] + " is not composable");
        if (term.arrows.size() < 2)
          throw SpecError(line_no, static_cast<int>(start) + 1, "relation paths must have length >= 2");
        std::string s = find_arrow(term.arrows.front())->source, t = find_arrow(term.arrows.back())->target;
        if (k == 0) {
          src = s;
          tgt = t;
        } else if (s != src || t != tgt) {
          throw SpecError(line_no, static_cast<int>(start) + 1, "relation terms have different endpoints");
        }
      }
      spec.relations.push_back(std::move(rel));
    } else {
      throw SpecError(line_no, 1, "unknown keyword '" + kw + "'");
    }
    if (!lx.at_end()) lx.fail("unexpected trailing text");
  }
  return spec;
}

std::string print_spec(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "field = " << spec.field << "\n";
  for (const auto& v : spec.vertices) os << "vertex " << v << "\n";
  for (const auto& a : spec.arrows) os << "arrow " << a.label << ": " << a.source << " -> " << a.target << "\n";
  for (const auto& rel : spec.relations) {
    os << "relation ";
    for (std::size_t k = 0; k < rel.size(); ++k) {
      const auto& t = rel[k];
      std::int64_t c = t.coeff;
      if (k > 0) {
        os << (c < 0 ? " - " : " + ");
        c = c < 0 ? -c : c;
      } else if (c < 0) {
        os << "-";
        c = -c;
      }
      if (c != 1) os << c << "*";
      for (std::size_t i = 0; i < t.arrows.size(); ++i) os << (i ? "*" : "") << t.arrows[i];
    }
    os << "\n";
  }
  return os.str();
}

Field spec_field(const AlgebraSpec& spec) { return Field::parse(spec.field); }

AlgebraPtr build_from_spec(const AlgebraSpec& spec) {
  Quiver q;
  for (const auto& v : spec.vertices) q.add_vertex(v);
  for (const auto& a : spec.arrows) q.add_arrow(a.label, a.source, a.target);
  std::vector<RelationExpr> rels;
  for (const auto& r : spec.relations) {
    std::vector<std::pair<std::int64_t, std::vector<std::string>>> terms;
    for (const auto& t : r) terms.emplace_back(t.coeff, t.arrows);
    rels.push_back(relation_from_paths(q, terms));
  }
  return build_algebra(std::move(q), std::move(rels));
}

// ---------------------------------------------------------------- families

namespace {

std::string num(int i) { return std::to_string(i); }

AlgebraSpec doubled_a(int n, bool preprojective) {
  AlgebraSpec s;
  for (int i = 1; i <= n; ++i) s.vertices.push_back(num(i));
  for (int i = 1; i < n; ++i) s.arrows.push_back({"a" + num(i), num(i), num(i + 1)});
  for (int i = 2; i <= n; ++i) s.arrows.push_back({"b" + num(i), num(i), num(i - 1)});
  if (n >= 2) s.relations.push_back({{1, {"a1", "b2"}}});
  for (int i = 2; i <= n - 1; ++i)
    s.relations.push_back({{1, {"a" + num(i), "b" + num(i + 1)}}, {-1, {"b" + num(i), "a" + num(i - 1)}}});
  if (preprojective && n >= 2) s.relations.push_back({{1, {"b" + num(n), "a" + num(n - 1)}}});
  return s;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"nakayama_a", "radsquare_a", "auslander_uniserial", "preprojective_a", "auslander_nakayama"};
}

AlgebraSpec family_spec(const std::string& name, int n) {
  if (n < 1) throw Error("family " + name + ": parameter must be >= 1");
  AlgebraSpec s;
  if (name == "nakayama_a") {
    for (int i = 1; i <= n; ++i) s.vertices.push_back(num(i));
    for (int i = 1; i < n; ++i) s.arrows.push_back({"a" + num(i), num(i + 1), num(i)});
  } else if (name == "radsquare_a") {
    for (int i = 1; i <= n + 1; ++i) s.vertices.push_back(num(i));
    for (int i = 1; i <= n; ++i) s.arrows.push_back({"a" + num(i), num(i), num(i + 1)});
    for (int i = 1; i < n; ++i) s.relations.push_back({{1, {"a" + num(i), "a" + num(i + 1)}}});
  } else if (name == "auslander_uniserial") {
    s = doubled_a(n, false);
  } else if (name == "preprojective_a") {
    s = doubled_a(n, true);
  } else if (name == "auslander_nakayama") {
    if (n > 6) throw Error("family auslander_nakayama: parameter must be <= 6");
    auto v = [](int i, int j) { return "v_" + num(i) + "_" + num(j); };
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= j; ++i) s.vertices.push_back(v(i, j));
    auto alpha = [](int i, int j) { return "a_" + num(i) + "_" + num(j); };  // (i,j) -> (i-1,j)
    auto beta = [](int i, int j) { return "b_" + num(i) + "_" + num(j); };   // (i,j) -> (i,j-1)
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= j; ++i) {
        if (i >= 2) s.arrows.push_back({alpha(i, j), v(i, j), v(i - 1, j)});
        if (j - 1 >= i) s.arrows.push_back({beta(i, j), v(i, j), v(i, j - 1)});
      }
    for (int j = 1; j <= n - 1; ++j)
      for (int i = 1; i <= j; ++i) {
        if (i < j)
          s.relations.push_back({{1, {alpha(i + 1, j + 1), beta(i, j + 1)}}, {-1, {beta(i + 1, j + 1), alpha(i + 1, j)}}});
        else
          s.relations.push_back({{1, {alpha(i + 1, j + 1), beta(i, j + 1)}}});
      }
  } else {
    throw Error("unknown family '" + name + "'");
  }
  return s;
}

AlgebraSpec family_spec(const std::string& name_colon_n) {
  auto colon = name_colon_n.find(':');
  if (colon == std::string::npos) throw Error("family must be given as name:n");
  std::string name = name_colon_n.substr(0, colon), arg = name_colon_n.substr(colon + 1);
  int n = 0;
  auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || p != arg.data() + arg.size()) throw Error("family parameter must be an integer");
  return family_spec(name, n);
}

}  // namespace qtilt
