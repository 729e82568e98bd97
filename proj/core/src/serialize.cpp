#include "polyhahn/serialize.hpp"

#include "polyhahn/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <unistd.h>

namespace polyhahn {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw OutOfRange("unknown format '" + std::string(text) + "' (expected json or csv)");
}

namespace {

json tuple(const MultiIndex& m) { return json(m.vec()); }

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json spec_json(const DomainSpec& s) {
  json j;
  j["d"] = s.d();
  j["N"] = s.N();
  j["ell"] = tuple(s.ell());
  json deg = json::array();
  for (const auto& [a, b] : s.degenerate_pairs()) deg.push_back({a, b});
  j["degenerate_pairs"] = deg;
  return j;
}

// JSON has no NaN; unfitted orders become null
json decimal(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string tuple_csv(const MultiIndex& m) {
  std::string s;
  for (std::size_t i = 0; i < m.dim(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

std::string header(const char* prefix, std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + std::string(prefix) + std::to_string(i);
  return s;
}

std::string dump(const json& j) { return j.dump(2); }

std::string fmt_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_json(const LatticeDomain& v) {
  json j = spec_json(v.spec());
  j["count"] = v.size();
  json pts = json::array();
  for (const auto& x : v.points()) pts.push_back(tuple(x));
  j["points"] = pts;
  return dump(j);
}

std::string to_csv(const LatticeDomain& v) {
  std::string out = header("x", v.spec().d()) + "\n";
  for (const auto& x : v.points()) out += tuple_csv(x) + "\n";
  return out;
}

std::string to_json(const IndexSet& h) {
  json j = spec_json(h.spec());
  j["count"] = h.size();
  json idx = json::array();
  for (const auto& nu : h.indices()) idx.push_back(tuple(nu));
  j["indices"] = idx;
  return dump(j);
}

std::string to_csv(const IndexSet& h) {
  std::string out = header("nu", h.spec().d()) + "\n";
  for (const auto& nu : h.indices()) out += tuple_csv(nu) + "\n";
  return out;
}

std::string to_json(const GramMatrix& g) {
  json j = spec_json(g.spec);
  j["shift"] = g.shift;
  json basis = json::array();
  for (const auto& nu : g.basis) basis.push_back(tuple(nu));
  j["basis"] = basis;
  j["diagonal"] = g.is_diagonal();
  json rows = json::array();
  for (const auto& r : g.entries) rows.push_back(rationals(r));
  j["entries"] = rows;
  return dump(j);
}

std::string to_csv(const GramMatrix& g) {
  std::string out = "row,col,value\n";
  for (std::size_t r = 0; r < g.entries.size(); ++r)
    for (std::size_t c = 0; c < g.entries[r].size(); ++c)
      if (sgn(g.entries[r][c]) != 0)
        out += std::to_string(r) + "," + std::to_string(c) + "," + to_string(g.entries[r][c]) + "\n";
  return out;
}

std::string to_json(const IdentityReport& r) {
  json j;
  j["family"] = r.family;
  j["representation"] = r.representation;
  j["all_hold"] = r.all_hold();
  j["count"] = r.checks.size();
  if (const auto* f = r.first_failure()) {
    j["first_failure"] = {{"name", f->name}, {"indices", f->indices}, {"witness", f->witness}};
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"indices", c.indices}, {"expect_zero", c.expect_zero}, {"holds", c.holds}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return dump(j);
}

std::string to_csv(const IdentityReport& r) {
  std::string out = "family,representation,name,indices,expect_zero,holds,witness\n";
  for (const auto& c : r.checks) {
    std::string idx;
    for (std::size_t i = 0; i < c.indices.size(); ++i) idx += (i ? " " : "") + std::to_string(c.indices[i]);
    out += csv_field(r.family) + "," + csv_field(r.representation) + "," + csv_field(c.name) + "," + idx + "," +
           (c.expect_zero ? "true" : "false") + "," + (c.holds ? "true" : "false") + "," + csv_field(c.witness) +
           "\n";
  }
  return out;
}

std::string to_json(const OrthogonalityReport& r) {
  json j;
  j["all_hold"] = r.all_hold();
  j["diagonal"] = r.diagonal;
  j["norms_match"] = r.norms_match;
  j["permuted_diagonal"] = r.permuted_diagonal;
  j["permuted_norms_match"] = r.permuted_norms_match;
  j["norms"] = rationals(r.norms);
  if (!r.witness.empty()) j["witness"] = r.witness;
  return dump(j);
}

std::string to_json(const SpectraReport& r) {
  json j;
  j["all_exact"] = r.all_exact;
  j["permuted_exact"] = r.permuted_exact;
  j["separated"] = r.separated;
  json recs = json::array();
  for (const auto& e : r.records) {
    json lam = json::array();
    for (std::size_t k = 0; k < e.lambda.size(); ++k) lam.push_back({{"k", k + 1}, {"lambda", to_string(e.lambda[k])}});
    recs.push_back({{"nu", tuple(e.nu)}, {"exact", e.exact}, {"eigenvalues", lam}});
  }
  j["records"] = recs;
  json col = json::array();
  for (const auto& [a, b] : r.collisions) col.push_back({tuple(a), tuple(b)});
  j["collisions"] = col;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return dump(j);
}

std::string to_csv(const SpectraReport& r) {
  std::string out = "nu,k,lambda,exact\n";
  for (const auto& e : r.records)
    for (std::size_t k = 0; k < e.lambda.size(); ++k)
      out += csv_field(tuple_csv(e.nu)) + "," + std::to_string(k + 1) + "," + to_string(e.lambda[k]) + "," +
             (e.exact ? "true" : "false") + "\n";
  return out;
}

std::string to_json(const ShuffleReport& r) {
  json j;
  j["holds"] = r.holds;
  j["heights_v"] = r.heights_v;
  j["heights_h"] = r.heights_h;
  j["tau"] = r.tau;
  j["partition_v"] = r.partition_v;
  j["partition_h"] = r.partition_h;
  j["h_closed_form_matches"] = r.h_closed_form_matches;
  return dump(j);
}

std::string to_json(const ProjectionShuffleReport& r) {
  json j;
  j["experiment"] = true;
  j["multisets_equal"] = r.multisets_equal;
  j["heights_v"] = r.heights_v;
  j["heights_h"] = r.heights_h;
  return dump(j);
}

std::string to_json(const CountingReport& r) {
  json j;
  j["d"] = r.d;
  j["N"] = r.N;
  j["all_ok"] = r.all_ok();
  json inst = json::array();
  for (const auto& c : r.instances) {
    json e{{"kind", c.kind == CountingInstance::Kind::Difference ? "difference" : "base"},
           {"ell", tuple(c.ell)},
           {"lhs", c.lhs},
           {"rhs", to_string(c.rhs)},
           {"ok", c.ok}};
    if (c.kind == CountingInstance::Kind::Difference) e["k"] = c.k;
    inst.push_back(e);
  }
  j["instances"] = inst;
  return dump(j);
}

std::string to_csv(const CountingReport& r) {
  std::string out = "d,N,kind,k,ell,lhs,rhs,ok\n";
  for (const auto& c : r.instances)
    out += std::to_string(r.d) + "," + std::to_string(r.N) + "," +
           (c.kind == CountingInstance::Kind::Difference ? "difference" : "base") + "," + std::to_string(c.k) + "," +
           csv_field(tuple_csv(c.ell)) + "," + std::to_string(c.lhs) + "," + to_string(c.rhs) + "," +
           (c.ok ? "true" : "false") + "\n";
  return out;
}

std::string to_json(const LimitScan& s) {
  json j;
  j["scan"] = s.name;
  j["parameter"] = s.parameter;
  j["ladder"] = rationals(s.ladder);
  j["expected_order"] = s.expected_order;
  j["tolerance"] = s.tolerance;
  j["passed"] = s.passed();
  j["note"] = s.note;
  json probes = json::array();
  for (std::size_t p = 0; p < s.probes.size(); ++p) {
    json errs = json::array(), dec = json::array();
    for (const auto& e : s.errors[p]) {
      errs.push_back(to_string(e));
      dec.push_back(to_double(e));
    }
    probes.push_back({{"id", s.probes[p]},
                      {"errors", errs},
                      {"errors_decimal", dec},
                      {"fitted_order", decimal(s.fitted_order[p])},
                      {"exact_zero", static_cast<bool>(s.exact_zero[p])},
                      {"monotone", static_cast<bool>(s.monotone[p])},
                      {"order_ok", static_cast<bool>(s.order_ok[p])},
                      {"faster", static_cast<bool>(s.faster[p])}});
  }
  j["probes"] = probes;
  return dump(j);
}

std::string to_csv(const LimitScan& s) {
  std::string out = s.parameter + ",probe,error,fitted_order\n";
  for (std::size_t p = 0; p < s.probes.size(); ++p)
    for (std::size_t r = 0; r < s.ladder.size(); ++r)
      out += to_string(s.ladder[r]) + "," + csv_field(s.probes[p]) + "," + fmt_double(to_double(s.errors[p][r])) +
             "," + fmt_double(s.fitted_order[p]) + "\n";
  return out;
}

std::string to_json(const SparseMatrix& m, const LatticeDomain& domain) {
  if (m.size() != domain.size()) throw LengthMismatch("matrix and domain sizes differ");
  json j = spec_json(domain.spec());
  j["size"] = m.size();
  j["nonzeros"] = m.nonzeros();
  json entries = json::array();
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m.row(r))
      entries.push_back({{"row", tuple(domain[r])}, {"col", tuple(domain[c])}, {"value", to_string(v)}});
  j["entries"] = entries;
  return dump(j);
}

std::string to_csv(const SparseMatrix& m, const LatticeDomain& domain) {
  if (m.size() != domain.size()) throw LengthMismatch("matrix and domain sizes differ");
  std::string out = "row,col,value\n";
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m.row(r))
      out += csv_field(tuple_csv(domain[r])) + "," + csv_field(tuple_csv(domain[c])) + "," + to_string(v) + "\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot rename into " + path.string());
  }
}

}  // namespace polyhahn
