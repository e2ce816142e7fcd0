#include "mist/audit.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mist/oracle.hpp"

namespace mist {

namespace {

long long to_ll(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in audit record");
  }
  return value;
}

Fraction parse_fraction(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("bad fraction '" + std::string(s) + "'");
  return Fraction{to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1))};
}

ShortCircuit parse_short_circuit(std::string_view s) {
  for (auto sc : {ShortCircuit::None, ShortCircuit::Tree, ShortCircuit::HamiltonianPath, ShortCircuit::SingleCycle}) {
    if (to_string(sc) == s) return sc;
  }
  throw std::invalid_argument("unknown short circuit '" + std::string(s) + "'");
}

}  // namespace

Fraction Fraction::reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::string to_string(const Fraction& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

std::string AuditRecord::status() const {
  if (!error.empty()) return "ERROR";
  return violation() ? "VIOLATION" : "ok";
}

AuditRecord audit_instance(long long id, const Graph& g, const AuditOptions& options) {
  AuditRecord r;
  r.id = id;
  r.n = g.n();
  r.m = g.m();
  try {
    ApproxOptions approx;
    approx.cover.mode = options.mode;
    approx.cover.exact_bound = options.cover_bound;
    const auto result = approx_mist(g, approx);
    r.alg = result.stats.internal;
    r.cover_edges = result.stats.cover_edges;
    r.unconstrained_edges = result.stats.unconstrained_edges;
    r.lossy_repair = result.stats.lossy_repairs > 0;
    r.short_circuit = result.stats.short_circuit;
    r.alpha_violations = result.stats.alpha_violations;
    if (options.oracle) {
      r.oracle = exact_mist(g, options.oracle_bound).internal;
      // Two vertices: both sides are 0.
      if (r.alg > 0) r.ratio = Fraction::reduced(*r.oracle, r.alg);
      else if (*r.oracle == 0) r.ratio = Fraction{1, 1};
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

AuditSummary ratio_audit(const CorpusSpec& corpus, const AuditOptions& options, const AuditSink& sink) {
  AuditSummary summary;
  for_each_instance(corpus, [&](long long id, const Graph& g) {
    const AuditRecord r = audit_instance(id, g, options);
    ++summary.instances;
    if (!r.error.empty()) ++summary.errors;
    if (r.violation()) ++summary.violations;
    if (r.ratio && (!summary.max_ratio || *summary.max_ratio < *r.ratio)) {
      summary.max_ratio = r.ratio;
    }
    if (sink) sink(r);
  });
  return summary;
}

std::vector<AuditRecord> ratio_audit(std::string_view corpus, const AuditOptions& options) {
  std::vector<AuditRecord> out;
  ratio_audit(parse_corpus_spec(corpus), options, [&](const AuditRecord& r) { out.push_back(r); });
  return out;
}

AuditSummary summarize(const std::vector<AuditRecord>& records) {
  AuditSummary s;
  for (const auto& r : records) {
    ++s.instances;
    if (!r.error.empty()) ++s.errors;
    if (r.violation()) ++s.violations;
    if (r.ratio && (!s.max_ratio || *s.max_ratio < *r.ratio)) s.max_ratio = r.ratio;
  }
  return s;
}

std::string serialize_record(const AuditRecord& r) {
  std::ostringstream out;
  out << "id=" << r.id << " n=" << r.n << " m=" << r.m << " alg=" << r.alg
      << " oracle=" << (r.oracle ? std::to_string(*r.oracle) : "-")
      << " cover=" << r.cover_edges << " unconstrained=" << r.unconstrained_edges
      << " ratio=" << (r.ratio ? to_string(*r.ratio) : "-") << " lossy=" << (r.lossy_repair ? 1 : 0)
      << " short_circuit=" << to_string(r.short_circuit) << " alpha_violations=" << r.alpha_violations
      << " status=" << r.status();
  if (!r.error.empty()) out << " error=" << r.error;
  return out.str();
}

AuditRecord parse_record(std::string_view line) {
  AuditRecord r;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto end = line.find(' ', pos);
    std::string_view token = line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("bad audit token '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    if (key == "error") {
      r.error = std::string(line.substr(pos + eq + 1));
      break;
    }
    const auto value = token.substr(eq + 1);
    if (key == "id") r.id = to_ll(value);
    else if (key == "n") r.n = static_cast<int>(to_ll(value));
    else if (key == "m") r.m = static_cast<int>(to_ll(value));
    else if (key == "alg") r.alg = static_cast<int>(to_ll(value));
    else if (key == "oracle") r.oracle = value == "-" ? std::nullopt : std::optional<int>(static_cast<int>(to_ll(value)));
    else if (key == "cover") r.cover_edges = static_cast<int>(to_ll(value));
    else if (key == "unconstrained") r.unconstrained_edges = static_cast<int>(to_ll(value));
    else if (key == "ratio") r.ratio = value == "-" ? std::nullopt : std::optional<Fraction>(parse_fraction(value));
    else if (key == "lossy") r.lossy_repair = value == "1";
    else if (key == "short_circuit") r.short_circuit = parse_short_circuit(value);
    else if (key == "alpha_violations") r.alpha_violations = static_cast<int>(to_ll(value));
    else if (key != "status") throw std::invalid_argument("unknown audit key '" + std::string(key) + "'");
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return r;
}

std::string serialize_summary(const AuditSummary& s) {
  return "summary instances=" + std::to_string(s.instances) +
         " max_ratio=" + (s.max_ratio ? to_string(*s.max_ratio) : "-") +
         " violations=" + std::to_string(s.violations) + " errors=" + std::to_string(s.errors);
}

}  // namespace mist
