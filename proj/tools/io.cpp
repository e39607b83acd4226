#include "io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hellylat/errors.hpp"

namespace hellylat::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("json: missing field '") + key + "'");
  return j.at(key);
}

std::string id_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InputError("json: identifiers must be strings or integers");
}

std::int64_t integer(const json& v, const std::string& what) {
  require(v.is_number_integer(), "json: " + what + " must be an integer");
  return v.get<std::int64_t>();
}

affine::Rational rational_from(const json& v) {
  if (v.is_number_integer()) return affine::Rational(v.get<std::int64_t>());
  require(v.is_string(), "json: coordinates must be integers or \"p/q\" strings");
  const auto s = v.get<std::string>();
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto x = std::stoll(s, &used);
      require(used == s.size(), "json: bad coordinate '" + s + "'");
      return affine::Rational(x);
    }
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    const auto p = std::stoll(num, &used);
    require(used == num.size(), "json: bad coordinate '" + s + "'");
    const auto q = std::stoll(den, &used);
    require(used == den.size() && q != 0, "json: bad coordinate '" + s + "'");
    return affine::Rational(p, q);
  } catch (const std::logic_error&) {
    throw InputError("json: bad coordinate '" + s + "'");
  }
}

// Positional parameter names for the text form of catalog specs.
std::vector<std::string> param_order(const std::string& kind) {
  if (kind == "subspace") return {"q", "n"};
  if (kind == "polar") return {"q", "dim"};
  if (kind == "random_graded") return {"seed", "size", "density"};
  return {"n"};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    require(depth >= 0, "catalog spec: unbalanced parentheses");
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  require(depth == 0, "catalog spec: unbalanced parentheses");
  out.push_back(trim(cur));
  return out;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

json load_json(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_json(text);
  }
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

json to_json(const FinitePoset& p) {
  json covers = json::array();
  for (auto [lo, hi] : p.cover_pairs()) covers.push_back({p.id(lo), p.id(hi)});
  return {{"elements", p.ids()}, {"covers", covers}};
}

FinitePoset poset_from_json(const json& j) {
  const auto& el = field(j, "elements");
  require(el.is_array(), "poset json: 'elements' must be an array");
  std::vector<std::string> ids;
  std::map<std::string, Elem> index;
  for (const auto& e : el) {
    ids.push_back(id_text(e));
    require(index.emplace(ids.back(), ids.size() - 1).second,
            "poset json: duplicate element '" + ids.back() + "'");
  }
  std::vector<std::pair<Elem, Elem>> covers;
  if (j.contains("covers")) {
    const auto& cv = j.at("covers");
    require(cv.is_array(), "poset json: 'covers' must be an array");
    for (const auto& c : cv) {
      require(c.is_array() && c.size() == 2, "poset json: covers are [lo, hi] pairs");
      auto lo = index.find(id_text(c[0])), hi = index.find(id_text(c[1]));
      require(lo != index.end() && hi != index.end(), "poset json: cover names an unknown element");
      covers.emplace_back(lo->second, hi->second);
    }
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

json to_json(const PosetProfile& p, const FinitePoset& poset) {
  auto opt_id = [&](const std::optional<Elem>& e) -> json {
    return e ? json(poset.id(*e)) : json(nullptr);
  };
  return {{"size", poset.size()},
          {"minimum", opt_id(p.bounded_below)},
          {"maximum", opt_id(p.bounded_above)},
          {"graded", p.graded},
          {"rank", p.rank ? json(*p.rank) : json(nullptr)},
          {"meet_semilattice", p.meet_semilattice},
          {"join_semilattice", p.join_semilattice},
          {"lattice", p.lattice},
          {"flag", p.flag}};
}

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  return {{"vertices", g.ids()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
  const auto& vs = field(j, "vertices");
  require(vs.is_array(), "graph json: 'vertices' must be an array");
  std::vector<std::string> ids;
  for (const auto& v : vs) ids.push_back(id_text(v));
  SimpleGraph g(ids);
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, "graph json: edges are [u, v] pairs");
      g.add_edge(g.index_of(id_text(e[0])), g.index_of(id_text(e[1])));
    }
  }
  return g;
}

MetricSample metric_from_json(const json& j) {
  const auto& pts = field(j, "points");
  const auto& d = field(j, "dist");
  std::vector<std::string> ids;
  for (const auto& p : pts) ids.push_back(id_text(p));
  const std::size_t n = ids.size();
  require(d.is_array() && d.size() == n, "metric json: 'dist' must be an n x n table");
  std::vector<double> table;
  for (const auto& row : d) {
    require(row.is_array() && row.size() == n, "metric json: 'dist' must be an n x n table");
    for (const auto& x : row) {
      require(x.is_number(), "metric json: distances must be numbers");
      table.push_back(x.get<double>());
    }
  }
  return MetricSample(std::move(ids), std::move(table));
}

CatalogSpec catalog_spec_from_json(const json& j) {
  CatalogSpec s;
  const auto& kind = field(j, "kind");
  require(kind.is_string(), "catalog json: 'kind' must be a string");
  s.kind = kind.get<std::string>();
  if (j.contains("params")) {
    require(j.at("params").is_object(), "catalog json: 'params' must be an object");
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = integer(v, "parameter " + k);
  }
  if (j.contains("children"))
    for (const auto& c : j.at("children")) s.children.push_back(catalog_spec_from_json(c));
  if (j.contains("graph")) s.graph = graph_from_json(j.at("graph"));
  if (j.contains("labels")) {
    require(s.graph.has_value(), "catalog json: labels need a graph");
    for (const auto& l : j.at("labels")) {
      require(l.is_array() && l.size() == 3, "catalog json: labels are [u, v, m] triples");
      EdgeLabel e;
      e.u = s.graph->index_of(id_text(l[0]));
      e.v = s.graph->index_of(id_text(l[1]));
      e.m = static_cast<int>(integer(l[2], "label"));
      s.labels.push_back(e);
    }
  }
  return s;
}

CatalogSpec catalog_spec_from_text(const std::string& raw) {
  const auto text = trim(raw);
  require(!text.empty(), "catalog spec: empty");
  CatalogSpec s;
  const auto open = text.find('(');
  const auto colon = text.find(':');
  if (open != std::string::npos && (colon == std::string::npos || open < colon)) {
    require(text.back() == ')', "catalog spec: expected ')' at the end");
    s.kind = trim(text.substr(0, open));
    for (const auto& part : split_top(text.substr(open + 1, text.size() - open - 2), ';'))
      s.children.push_back(catalog_spec_from_text(part));
    return s;
  }
  s.kind = trim(text.substr(0, colon));
  if (colon == std::string::npos) return s;
  const auto order = param_order(s.kind);
  std::size_t pos = 0;
  for (const auto& item : split_top(text.substr(colon + 1), ',')) {
    require(!item.empty(), "catalog spec: empty parameter");
    std::string key, value;
    if (const auto eq = item.find('='); eq != std::string::npos) {
      key = trim(item.substr(0, eq));
      value = trim(item.substr(eq + 1));
    } else {
      require(pos < order.size(), "catalog spec: too many parameters for '" + s.kind + "'");
      key = order[pos++];
      value = item;
    }
    try {
      std::size_t used = 0;
      s.params[key] = std::stoll(value, &used);
      require(used == value.size(), "catalog spec: bad value '" + value + "'");
    } catch (const std::logic_error&) {
      throw InputError("catalog spec: bad value '" + value + "'");
    }
  }
  return s;
}

std::string rational_text(const affine::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const affine::AffineContext& ctx, const affine::MPoint& p) {
  json u = json::array();
  for (auto x : p.u) {
    const affine::Rational r(x, ctx.denom());
    if (r.denominator() == 1) {
      u.push_back(r.numerator());
    } else {
      u.push_back(rational_text(r));
    }
  }
  json jumps = json::object();
  for (auto [k, e] : p.jumps()) jumps[std::to_string(k)] = ctx.base().id(e);
  return {{"u", u}, {"jumps", jumps}};
}

affine::MPoint mpoint_from_json(const affine::AffineContext& ctx, const json& j) {
  const auto& uj = field(j, "u");
  require(uj.is_array(), "point json: 'u' must be an array");
  std::vector<std::int64_t> units;
  for (const auto& x : uj) {
    const auto r = rational_from(x) * ctx.denom();
    require(r.denominator() == 1, "point json: coordinate outside the step group");
    units.push_back(r.numerator());
  }
  std::map<std::size_t, Elem> jumps;
  if (j.contains("jumps")) {
    require(j.at("jumps").is_object(), "point json: 'jumps' must be an object");
    for (const auto& [k, v] : j.at("jumps").items()) {
      std::size_t pos = 0;
      try {
        std::size_t used = 0;
        pos = std::stoul(k, &used);
        require(used == k.size(), "point json: bad jump position '" + k + "'");
      } catch (const std::logic_error&) {
        throw InputError("point json: bad jump position '" + k + "'");
      }
      jumps[pos] = ctx.base().index_of(id_text(v));
    }
  }
  return affine::point_from_jumps(ctx, std::move(units), jumps);
}

json to_json(const garside::SimplesLattice& ctx, const garside::BraidElement& g) {
  json body = json::array();
  for (auto s : g.body) body.push_back(ctx.format(s));
  return {{"normal_form", garside::format(ctx, g)},
          {"inf", g.inf},
          {"sup", g.sup()},
          {"body", body}};
}

std::string family_name(coxeter::Family f) {
  return f == coxeter::Family::a_extended ? "A_extended" : "C";
}

coxeter::Family family_from_text(const std::string& s) {
  if (s == "A_extended" || s == "A" || s == "a") return coxeter::Family::a_extended;
  if (s == "C" || s == "c") return coxeter::Family::c;
  throw InputError("unknown Coxeter family '" + s + "' (expected A_extended or C)");
}

json to_json(coxeter::Family f, const coxeter::Point& x) {
  return {{"family", family_name(f)}, {"coords", x}};
}

coxeter::Point point_from_text(const std::string& s) {
  auto t = trim(s);
  if (t.size() >= 2 && (t.front() == '(' || t.front() == '[')) t = t.substr(1, t.size() - 2);
  coxeter::Point x;
  for (const auto& item : split_top(t, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stoll(item, &used));
      require(used == item.size(), "bad coordinate '" + item + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad coordinate '" + item + "'");
    }
  }
  return x;
}

}  // namespace hellylat::io
