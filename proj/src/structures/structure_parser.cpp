#include <fstream>
#include <sstream>

#include "anaprop/parser.hpp"
#include "anaprop/structure.hpp"

namespace anaprop {

namespace {

using detail::Token;

struct FunctionEntry {
  std::string symbol;
  std::vector<std::string> args;
  std::string value;
  std::size_t pos;
};

struct TupleEntry {
  std::string symbol;
  std::vector<std::string> tuple;
  std::size_t pos;
};

class StructureParser {
 public:
  explicit StructureParser(std::string_view text) : tokens_(detail::tokenize(text, "{}():,=/;")) {}

  std::vector<FiniteStructure> parse() {
    std::vector<FiniteStructure> out;
    while (peek().kind != Token::Kind::End) out.push_back(block());
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(const char* p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  bool at_word(const char* w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }
  void expect(const char* p) {
    if (!at(p)) throw ParseError(std::string("expected '") + p + "'", peek().pos);
    next();
  }
  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident)
      throw ParseError(std::string("expected ") + what, peek().pos);
    return next().text;
  }
  int number() {
    std::size_t at = peek().pos;
    std::string s = ident("an arity");
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("expected an arity, got '" + s + "'", at);
    }
  }

  std::vector<std::string> tuple() {
    expect("(");
    std::vector<std::string> out;
    if (!at(")")) {
      out.push_back(ident("an element"));
      while (at(",")) {
        next();
        out.push_back(ident("an element"));
      }
    }
    expect(")");
    return out;
  }

  FiniteStructure block() {
    bool graph = false;
    std::size_t start = peek().pos;
    if (at_word("graph")) {
      graph = true;
    } else if (!at_word("structure")) {
      throw ParseError("expected 'structure' or 'graph'", start);
    }
    next();
    std::string name = ident("a structure name");
    if (at_word("graph")) {
      graph = true;
      next();
    }
    expect("{");

    Signature sig;
    std::vector<std::string> universe;
    bool have_universe = false;
    std::vector<FunctionEntry> fentries;
    std::vector<TupleEntry> rentries;
    std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> centries;

    while (!at("}")) {
      if (at(";")) {
        next();
        continue;
      }
      std::size_t kpos = peek().pos;
      std::string kw = ident("a declaration");
      try {
        if (kw == "universe") {
          expect(":");
          have_universe = true;
          while (peek().kind == Token::Kind::Ident && !is_declaration(peek().text))
            universe.push_back(next().text);
        } else if (kw == "function") {
          std::string f = ident("a function symbol");
          expect("/");
          sig.add_function(f, number());
          expect("{");
          while (!at("}")) {
            std::size_t epos = peek().pos;
            auto args = tuple();
            expect("->");
            fentries.push_back({f, std::move(args), ident("an element"), epos});
            if (at(",")) next();
          }
          expect("}");
        } else if (kw == "relation") {
          std::string r = ident("a relation symbol");
          expect("/");
          sig.add_relation(r, number());
          expect("{");
          while (!at("}")) {
            std::size_t epos = peek().pos;
            rentries.push_back({r, tuple(), epos});
            if (at(",")) next();
          }
          expect("}");
        } else if (kw == "constant") {
          std::string c = ident("a constant symbol");
          sig.add_constant(c);
          expect("=");
          std::size_t epos = peek().pos;
          centries.push_back({c, {ident("an element"), epos}});
        } else {
          throw ParseError("unknown declaration '" + kw + "'", kpos);
        }
      } catch (const SignatureError& e) {
        throw ParseError(e.what(), kpos);
      }
    }
    expect("}");
    if (!have_universe || universe.empty())
      throw ParseError("structure '" + name + "' needs a non-empty universe", start);
    if (graph && sig.relations().empty()) sig.add_relation("E", 2);  // edgeless graph

    try {
      FiniteStructure s(name, sig, universe);
      auto ids = [&](const std::vector<std::string>& names, std::size_t pos) {
        std::vector<Element> out;
        for (const auto& n : names) {
          auto e = s.find_element(n);
          if (!e) throw ParseError("unknown element '" + n + "'", pos);
          out.push_back(*e);
        }
        return out;
      };
      for (const auto& fe : fentries) {
        auto v = ids({fe.value}, fe.pos);
        s.set_function(fe.symbol, ids(fe.args, fe.pos), v[0]);
      }
      for (const auto& re : rentries) {
        auto t = ids(re.tuple, re.pos);
        s.add_tuple(re.symbol, t);
        if (graph && t.size() == 2) s.add_tuple(re.symbol, {t[1], t[0]});
      }
      for (const auto& [c, v] : centries) s.set_constant(c, ids({v.first}, v.second)[0]);
      s.validate();
      return s;
    } catch (const StructureError& e) {
      throw ParseError(e.what(), start);
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), start);
    }
  }

  static bool is_declaration(const std::string& w) {
    return w == "function" || w == "relation" || w == "constant" || w == "universe";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<FiniteStructure> parse_structures(std::string_view text) {
  return StructureParser(text).parse();
}

std::vector<FiniteStructure> load_structures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structures(buf.str());
}

}  // namespace anaprop
