#include "nkc/manifest.hpp"

#include "nkc/error.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <tuple>

namespace nkc {

namespace {

using json = nlohmann::ordered_json;

class Loader {
 public:
  explicit Loader(std::vector<std::string>& errors) : errors_(errors) {}

  void error(const std::string& path, const std::string& msg) { errors_.push_back(path + ": " + msg); }

  std::optional<Scalar> scalar(const json& v, const std::string& path, const ParamSpace& params) {
    try {
      if (v.is_number_integer()) return Scalar::constant(Rational(v.get<long long>()), params);
      if (v.is_string()) return parse_scalar(v.get<std::string>(), params);
      error(path, "expected an expression string or integer");
    } catch (const ParseError& e) {
      error(path, e.what());
    } catch (const Error& e) {
      error(path, e.what());
    }
    return std::nullopt;
  }

  std::optional<std::size_t> index(const json& v, const std::string& path, std::size_t dim) {
    if (!v.is_number_integer()) {
      error(path, "expected an integer index");
      return std::nullopt;
    }
    long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim) {
      error(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
      return std::nullopt;
    }
    return static_cast<std::size_t>(i - 1);
  }

  std::optional<FrameVector> vector(const json& v, const std::string& path, std::size_t dim,
                                    const ParamSpace& params) {
    if (!v.is_array() || v.size() != dim) {
      error(path, "expected a list of " + std::to_string(dim) + " components");
      return std::nullopt;
    }
    FrameVector out(dim);
    bool ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
      auto s = scalar(v[i], path + "[" + std::to_string(i) + "]", params);
      if (s) out[i] = *s;
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

 private:
  std::vector<std::string>& errors_;
};

}  // namespace

LoadedManifest load_manifest(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ManifestError({std::string("document: ") + e.what()});
  }
  std::vector<std::string> errors;
  Loader ld(errors);
  if (!doc.is_object()) throw ManifestError({"document: expected an object"});

  for (const auto& [key, _] : doc.items()) {
    if (key != "dimension" && key != "parameters" && key != "structure_constants" && key != "contact") {
      ld.error(key, "unknown field");
    }
  }

  std::size_t dim = 0;
  if (!doc.contains("dimension")) {
    ld.error("dimension", "missing");
  } else if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1) {
    ld.error("dimension", "expected a positive integer");
  } else {
    long long d = doc["dimension"].get<long long>();
    if (d % 2 == 0) ld.error("dimension", "must be odd, got " + std::to_string(d));
    else dim = static_cast<std::size_t>(d);
  }

  std::vector<std::string> names;
  if (doc.contains("parameters")) {
    const json& p = doc["parameters"];
    if (!p.is_array()) {
      ld.error("parameters", "expected a list of names");
    } else {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string path = "parameters[" + std::to_string(i) + "]";
        if (!p[i].is_string()) {
          ld.error(path, "expected a name");
          continue;
        }
        std::string n = p[i].get<std::string>();
        bool valid = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
        for (char ch : n) valid = valid && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!valid) ld.error(path, "invalid parameter name '" + n + "'");
        else if (!seen.insert(n).second) ld.error(path, "duplicate parameter '" + n + "'");
        else names.push_back(n);
      }
    }
  }
  if (dim == 0) throw ManifestError(errors);
  const ParamSpace params(names);

  std::vector<StructureConstant> constants;
  if (!doc.contains("structure_constants")) {
    ld.error("structure_constants", "missing");
  } else if (!doc["structure_constants"].is_array()) {
    ld.error("structure_constants", "expected a list");
  } else {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    const json& sc = doc["structure_constants"];
    for (std::size_t n = 0; n < sc.size(); ++n) {
      const std::string path = "structure_constants[" + std::to_string(n) + "]";
      const json& e = sc[n];
      if (!e.is_object()) {
        ld.error(path, "expected an object with i, j, k, coeff");
        continue;
      }
      std::optional<std::size_t> i, j, k;
      std::optional<Scalar> c;
      for (const char* f : {"i", "j", "k", "coeff"}) {
        if (!e.contains(f)) ld.error(path + "." + f, "missing");
      }
      if (e.contains("i")) i = ld.index(e["i"], path + ".i", dim);
      if (e.contains("j")) j = ld.index(e["j"], path + ".j", dim);
      if (e.contains("k")) k = ld.index(e["k"], path + ".k", dim);
      if (e.contains("coeff")) c = ld.scalar(e["coeff"], path + ".coeff", params);
      if (!i || !j || !k || !c) continue;
      if (*i >= *j) {
        ld.error(path, "i < j required");
        continue;
      }
      if (!seen.insert({*i, *j, *k}).second) {
        ld.error(path, "duplicate entry for (" + std::to_string(*i + 1) + "," + std::to_string(*j + 1) + "," +
                           std::to_string(*k + 1) + ")");
        continue;
      }
      constants.push_back({*i, *j, *k, *c});
    }
  }

  std::optional<FrameVector> xi, eta;
  std::optional<Endomorphism> phi;
  if (!doc.contains("contact")) {
    ld.error("contact", "missing");
  } else if (!doc["contact"].is_object()) {
    ld.error("contact", "expected an object");
  } else {
    const json& c = doc["contact"];
    for (const auto& [key, _] : c.items()) {
      if (key != "xi" && key != "eta" && key != "phi") ld.error("contact." + key, "unknown field");
    }
    if (!c.contains("xi")) {
      ld.error("contact.xi", "missing");
    } else if (c["xi"].is_number_integer()) {
      if (auto i = ld.index(c["xi"], "contact.xi", dim)) xi = FrameVector::basis(dim, *i);
    } else {
      xi = ld.vector(c["xi"], "contact.xi", dim, params);
    }
    if (!c.contains("eta")) ld.error("contact.eta", "missing");
    else eta = ld.vector(c["eta"], "contact.eta", dim, params);
    if (!c.contains("phi")) {
      ld.error("contact.phi", "missing");
    } else if (!c["phi"].is_array() || c["phi"].size() != dim) {
      ld.error("contact.phi", "expected " + std::to_string(dim) + " rows");
    } else {
      Endomorphism p(dim);
      bool ok = true;
      for (std::size_t r = 0; r < dim; ++r) {
        auto row = ld.vector(c["phi"][r], "contact.phi[" + std::to_string(r) + "]", dim, params);
        if (!row) {
          ok = false;
          continue;
        }
        for (std::size_t col = 0; col < dim; ++col) p(r, col) = (*row)[col];
      }
      if (ok) phi = std::move(p);
    }
  }

  if (!errors.empty()) throw ManifestError(errors);
  return LoadedManifest{FrameManifold(dim, params, constants), AlmostContactData{*phi, *xi, *eta}};
}

std::string emit_manifest(const FrameManifold& m, const AlmostContactData& s) {
  const std::size_t d = m.dim();
  json doc;
  doc["dimension"] = d;
  doc["parameters"] = m.params().names();
  json sc = json::array();
  for (const auto& c : m.sparse_constants()) {
    sc.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"k", c.k + 1}, {"coeff", c.coeff.str()}});
  }
  doc["structure_constants"] = sc;
  auto components = [](const FrameVector& v) {
    json out = json::array();
    for (const auto& x : v.components()) out.push_back(x.str());
    return out;
  };
  json contact;
  std::optional<std::size_t> xi_index;
  for (std::size_t i = 0; i < d; ++i) {
    if (s.xi == m.basis(i)) xi_index = i;
  }
  if (xi_index) contact["xi"] = *xi_index + 1;
  else contact["xi"] = components(s.xi);
  contact["eta"] = components(s.eta);
  json phi = json::array();
  for (std::size_t r = 0; r < d; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < d; ++c) row.push_back(s.phi(r, c).str());
    phi.push_back(row);
  }
  contact["phi"] = phi;
  doc["contact"] = contact;
  return doc.dump(2) + "\n";
}

std::string manifest_hash(const FrameManifold& m, const AlmostContactData& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : emit_manifest(m, s)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nkc
