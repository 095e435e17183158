#include "wha/dsl.hpp"

#include <cctype>

namespace wha::dsl {

ExprPtr Expr::gen(std::string n) {
  auto e = std::make_shared<Expr>();
  e->node = Node::gen;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::id(std::vector<std::string> objs) {
  auto e = std::make_shared<Expr>();
  e->node = Node::id;
  e->objects = std::move(objs);
  return e;
}

ExprPtr Expr::sym(std::string a, std::string b) {
  auto e = std::make_shared<Expr>();
  e->node = Node::sym;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ExprPtr Expr::comp(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->node = Node::comp;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

ExprPtr Expr::tens(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->node = Node::tens;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

bool equal(const Expr& x, const Expr& y) {
  if (x.node != y.node) return false;
  switch (x.node) {
    case Expr::Node::gen: return x.name == y.name;
    case Expr::Node::id: return x.objects == y.objects;
    case Expr::Node::sym: return x.a == y.a && x.b == y.b;
    case Expr::Node::comp:
    case Expr::Node::tens:
      return equal(*x.left, *y.left) && equal(*x.right, *y.right);
  }
  return false;
}

void Env::validate() const {
  for (const auto& [name, sig] : sigs) {
    auto it = gens.find(name);
    if (it == gens.end())
      throw Error(ErrorKind::unbound_name, "signature for unbound generator '" + name + "'");
    auto dim_of = [&](const std::vector<std::string>& objs) {
      long d = 1;
      for (const auto& o : objs) {
        auto oit = objects.find(o);
        if (oit == objects.end())
          throw Error(ErrorKind::unbound_name, "object '" + o + "' in signature of '" + name + "'");
        d *= oit->second;
      }
      return d;
    };
    if (dim_of(sig.dom) != it->second.dom() || dim_of(sig.cod) != it->second.cod())
      throw Error(ErrorKind::validation,
                  "generator '" + name + "' does not match its declared signature", name);
  }
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    throw Error(ErrorKind::syntax, msg + " at byte " + std::to_string(at), "", static_cast<long>(at));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_name_char(size_t i) const {
    if (i >= s.size()) return false;
    unsigned char c = s[i];
    return std::isalnum(c) || c == '_' || c == '\'';
  }

  // Peeks a NAME token; "o" is the composition keyword, never a name.
  std::string peek_name() {
    skip_ws();
    size_t i = pos;
    std::string n;
    while (at_name_char(i)) n += s[i++];
    return n;
  }

  std::string take_name(const char* what) {
    skip_ws();
    std::string n = peek_name();
    if (n.empty() || n == "o") fail(std::string("expected ") + what, pos);
    pos += n.size();
    return n;
  }

  bool take(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  bool take_compose_keyword() {
    skip_ws();
    if (peek_name() == "o") {
      pos += 1;
      return true;
    }
    return false;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input", pos);
    if (take('(')) {
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    std::string n = peek_name();
    if (n.empty() || n == "o") fail("expected atom", pos);
    pos += n.size();
    if (n == "id") {
      expect('[');
      std::vector<std::string> objs;
      objs.push_back(take_name("object name"));
      while (take(',')) objs.push_back(take_name("object name"));
      expect(']');
      return Expr::id(std::move(objs));
    }
    if (n == "c") {
      expect('[');
      std::string a = take_name("object name");
      expect(',');
      std::string b = take_name("object name");
      expect(']');
      return Expr::sym(std::move(a), std::move(b));
    }
    return Expr::gen(std::move(n));
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_atom();
    while (take('*')) e = Expr::tens(e, parse_atom());
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (take_compose_keyword()) e = Expr::comp(e, parse_term());
    return e;
  }
};

} // namespace

ExprPtr parse(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input", p.pos);
  return e;
}

namespace {

int object_dim(const Env& env, const std::string& name) {
  auto it = env.objects.find(name);
  if (it == env.objects.end())
    throw Error(ErrorKind::unbound_name, "object '" + name + "'");
  return it->second;
}

} // namespace

std::pair<int, int> typecheck(const Expr& e, const Env& env) {
  switch (e.node) {
    case Expr::Node::gen: {
      auto it = env.gens.find(e.name);
      if (it == env.gens.end())
        throw Error(ErrorKind::unbound_name, "generator '" + e.name + "'");
      return {it->second.dom(), it->second.cod()};
    }
    case Expr::Node::id: {
      int d = 1;
      for (const auto& o : e.objects) d *= object_dim(env, o);
      return {d, d};
    }
    case Expr::Node::sym: {
      int d = object_dim(env, e.a) * object_dim(env, e.b);
      return {d, d};
    }
    case Expr::Node::comp: {
      auto [ld, lc] = typecheck(*e.left, env);
      auto [rd, rc] = typecheck(*e.right, env);
      if (rc != ld)
        throw Error(ErrorKind::type_mismatch,
                    "composition mismatch: " + std::to_string(ld) + " vs " + std::to_string(rc));
      return {rd, lc};
    }
    case Expr::Node::tens: {
      auto [ld, lc] = typecheck(*e.left, env);
      auto [rd, rc] = typecheck(*e.right, env);
      return {ld * rd, lc * rc};
    }
  }
  throw Error(ErrorKind::internal, "unreachable expression node");
}

Mor eval(const Expr& e, const Env& env) {
  typecheck(e, env);
  switch (e.node) {
    case Expr::Node::gen:
      return env.gens.at(e.name);
    case Expr::Node::id: {
      int d = 1;
      for (const auto& o : e.objects) d *= object_dim(env, o);
      return Mor::identity(d, env.field);
    }
    case Expr::Node::sym:
      return swap(object_dim(env, e.a), object_dim(env, e.b), env.field);
    case Expr::Node::comp:
      return compose(eval(*e.left, env), eval(*e.right, env));
    case Expr::Node::tens:
      return tensor(eval(*e.left, env), eval(*e.right, env));
  }
  throw Error(ErrorKind::internal, "unreachable expression node");
}

namespace {

std::string print_wrapped(const Expr& e) {
  std::string s = print(e);
  if (e.node == Expr::Node::comp || e.node == Expr::Node::tens) return "(" + s + ")";
  return s;
}

} // namespace

std::string print(const Expr& e) {
  switch (e.node) {
    case Expr::Node::gen:
      return e.name;
    case Expr::Node::id: {
      std::string s = "id[";
      for (size_t i = 0; i < e.objects.size(); ++i) {
        if (i) s += ',';
        s += e.objects[i];
      }
      return s + "]";
    }
    case Expr::Node::sym:
      return "c[" + e.a + "," + e.b + "]";
    case Expr::Node::comp:
      return print_wrapped(*e.left) + " o " + print_wrapped(*e.right);
    case Expr::Node::tens:
      return print_wrapped(*e.left) + " * " + print_wrapped(*e.right);
  }
  return {};
}

} // namespace wha::dsl
