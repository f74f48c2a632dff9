#include "szego/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace szego::io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return v.get<double>();
}

Index index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ValidationError(std::string(what) + " must be a nonnegative integer");
  return v.get<Index>();
}

// [k, j, re, im] rows keyed by (k, j); every admissible pair exactly once.
std::map<std::pair<Index, Index>, Complex> pair_rows(const json& rows, Index size, bool strict_upper,
                                                     const char* what) {
  if (!rows.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::map<std::pair<Index, Index>, Complex> out;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != 4)
      throw ValidationError(std::string(what) + " rows must be [k, j, re, im]");
    const Index k = index(r[0], "k");
    const Index j = index(r[1], "j");
    if (j >= size || k > j || (strict_upper && k == j))
      throw ValidationError(std::string(what) + " index (" + std::to_string(k) + "," +
                            std::to_string(j) + ") out of range");
    if (!out.emplace(std::make_pair(k, j), Complex(number(r[2], "re"), number(r[3], "im"))).second)
      throw ValidationError(std::string(what) + " pair (" + std::to_string(k) + "," +
                            std::to_string(j) + ") listed twice");
  }
  const Index expected = strict_upper ? size * (size - (size > 0)) / 2 : size * (size + 1) / 2;
  if (out.size() != expected)
    throw ValidationError("missing " + std::string(what) + " entries: got " +
                          std::to_string(out.size()) + ", need " + std::to_string(expected));
  return out;
}

}  // namespace

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

MomentKernel kernel_from_json(const std::string& text) {
  const json j = parse(text);
  const Index size = index(field(j, "size"), "size");
  const auto rows = pair_rows(field(j, "entries"), size, false, "entries");
  return MomentKernel(size, [&](Index a, Index b) { return rows.at({a, b}); });
}

std::string kernel_to_json(const MomentKernel& k) {
  ordered j;
  j["size"] = k.size();
  ordered rows = ordered::array();
  for (Index a = 0; a < k.size(); ++a)
    for (Index b = a; b < k.size(); ++b) {
      const Complex v = k(a, b);
      rows.push_back({a, b, v.real(), v.imag()});
    }
  j["entries"] = rows;
  return j.dump() + "\n";
}

GammaField gamma_from_json(const std::string& text) {
  const json j = parse(text);
  const json& diag_json = field(j, "diag");
  if (!diag_json.is_array()) throw ValidationError("diag must be an array");
  std::vector<double> diag;
  for (const auto& v : diag_json) diag.push_back(number(v, "diag entry"));
  const auto rows = pair_rows(field(j, "gamma"), diag.size(), true, "gamma");
  return GammaField(diag, [&](Index a, Index b) { return rows.at({a, b}); });
}

namespace {

ordered gamma_object(const GammaField& g) {
  ordered j;
  j["diag"] = g.diag();
  ordered rows = ordered::array();
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = a + 1; b < g.size(); ++b) {
      const Complex v = g.gamma(a, b);
      rows.push_back({a, b, v.real(), v.imag()});
    }
  j["gamma"] = rows;
  return j;
}

}  // namespace

std::string gamma_to_json(const GammaField& g) { return gamma_object(g).dump() + "\n"; }

std::string gamma_to_json(const SquaredGammaField& g) {
  ordered j = gamma_object(g.to_float());
  ordered diag = ordered::array();
  for (Index a = 0; a < g.size(); ++a) diag.push_back(g.diag(a).get_str());
  j["diag_exact"] = diag;
  ordered rows = ordered::array();
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = a + 1; b < g.size(); ++b) {
      const auto& e = g.entry(a, b);
      rows.push_back({a, b, e.sign, e.gamma_sq.get_str()});
    }
  j["exact"] = rows;
  return j.dump() + "\n";
}

TreeGammaField tree_from_json(const std::string& text, Index depth) {
  const json j = parse(text);
  const Index n = index(field(j, "N"), "N");
  if (n < 1 || n > 9) throw ValidationError("N must be in 1..9");
  TreeGammaField g(static_cast<unsigned>(n), depth);
  const json& rows = field(j, "gamma");
  if (!rows.is_array()) throw ValidationError("gamma must be an array");
  std::vector<char> seen(word_count(static_cast<unsigned>(n), depth), 0);
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != 3 || !r[0].is_string())
      throw ValidationError("tree gamma rows must be [\"word\", re, im]");
    const Word w = Word::parse(r[0].get<std::string>(), static_cast<unsigned>(n));
    if (w.empty()) throw ValidationError("the empty word carries no parameter");
    if (w.length() > depth)
      throw ValidationError("word " + w.to_string() + " deeper than depth " + std::to_string(depth));
    if (seen[w.rank()]++) throw ValidationError("word " + w.to_string() + " listed twice");
    g.set(w, Complex(number(r[1], "re"), number(r[2], "im")));
  }
  return g;
}

std::string poly_csv(const PolyTable& t, bool reversed) {
  std::string out = "n,l,k,re,im\n";
  for (Index n = 0; n <= t.max_degree(); ++n)
    for (Index l = 0; l <= t.max_level(); ++l) {
      const auto p = reversed ? t.phi_sharp(n, l) : t.phi(n, l);
      for (Index k = 0; k <= n; ++k)
        out += std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(k) + "," +
               num(p[k].real()) + "," + num(p[k].imag()) + "\n";
    }
  return out;
}

namespace {

std::string coeff_text(Complex c) {
  char buf[64];
  if (c.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.10g", c.real());
  else
    std::snprintf(buf, sizeof buf, "(%.10g%+.10gi)", c.real(), c.imag());
  return buf;
}

}  // namespace

std::string poly_human(const PolyTable& t, bool reversed) {
  std::string out;
  for (Index n = 0; n <= t.max_degree(); ++n)
    for (Index l = 0; l <= t.max_level(); ++l) {
      const auto p = reversed ? t.phi_sharp(n, l) : t.phi(n, l);
      out += std::string(reversed ? "phi#" : "phi") + " n=" + std::to_string(n) +
             " l=" + std::to_string(l) + ":";
      bool first = true;
      for (Index k = n + 1; k-- > 0;) {
        Complex c = p[k];
        if (c == Complex{}) continue;
        std::string sign = first ? "" : " +";
        if (!first && c.imag() == 0.0 && c.real() < 0) {
          sign = " -";
          c = -c;
        }
        out += sign + " " + coeff_text(c);
        if (k >= 1) out += "*x";
        if (k >= 2) out += "^" + std::to_string(k);
        first = false;
      }
      if (first) out += " 0";
      out += "\n";
    }
  return out;
}

std::string lattice_text(const std::vector<LatticeTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += t.to_string() + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << contents;
  if (!out) throw ValidationError("write failed for " + path);
}

}  // namespace szego::io
