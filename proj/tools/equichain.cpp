// equichain: exact computation with Inc-invariant ideal chains in truncated
// polynomial rings -- Groebner bases, initial-ideal chains, stability
// certificates, order classification checks and a degree-truncated linear
// algebra oracle.  Output is deterministic: same inputs, same bytes.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equichain/equichain.hpp"

using nlohmann::ordered_json;
using namespace equichain;

namespace {

constexpr int kSchemaVersion = 1;

/// Collects either text lines or a JSON document and prints exactly one of
/// them at the end of a command.
class Report {
 public:
  explicit Report(bool as_json, const std::string& command) : as_json_(as_json) {
    doc_["schema_version"] = kSchemaVersion;
    doc_["command"] = command;
  }
  void line(const std::string& s) { lines_.push_back(s); }
  ordered_json& json() { return doc_; }
  void emit() const {
    if (as_json_) {
      std::cout << doc_.dump(2) << "\n";
    } else {
      for (const std::string& s : lines_) std::cout << s << "\n";
    }
  }

 private:
  bool as_json_;
  ordered_json doc_;
  std::vector<std::string> lines_;
};

std::vector<PolyQ> parse_poly_list(const std::string& text, Truncation t) {
  std::vector<PolyQ> out;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    if (chunk.find_first_not_of(" \t") == std::string::npos) continue;
    PolyQ f = parse_polynomial(chunk, t);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::vector<std::pair<int, int>> parse_points(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("points must look like 1:2,4:5");
    out.push_back({std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
  }
  return out;
}

std::string poly_str(const PolyQ& f, int c) { return f.str(c == 1); }

ordered_json monomial_list_json(const std::vector<Monomial>& monos, int c) {
  ordered_json arr = ordered_json::array();
  for (const Monomial& m : monos) arr.push_back(m.str(c == 1));
  return arr;
}

std::string ideal_str(const MonomialIdeal& ideal, int c) { return ideal.str(c == 1); }

/// Orders selected via --order (repeatable) and/or --orders all-six.
std::vector<Order> resolve_orders(const std::vector<std::string>& order_specs,
                                  const std::string& orders_keyword) {
  std::vector<Order> out;
  if (!orders_keyword.empty()) {
    if (orders_keyword != "all-six") throw std::invalid_argument("--orders accepts only 'all-six'");
    for (const Order& o : six_term_orders()) out.push_back(o);
  }
  for (const std::string& spec : order_specs) out.push_back(Order::parse(spec));
  if (out.empty()) throw std::invalid_argument("no order given (use --order or --orders)");
  return out;
}

int run_gb(const std::string& gens_text, const std::string& order_spec, int c, int n,
           bool chain_criterion, bool as_json) {
  const Truncation t{c, n};
  const Order order = Order::parse(order_spec);
  const std::vector<PolyQ> gens = parse_poly_list(gens_text, t);
  BuchbergerOptions opts;
  opts.chain_criterion = chain_criterion;
  const GroebnerBasis gb = buchberger(gens, order, t, opts);
  const MonomialIdeal in_ideal = initial_ideal(gb);

  Report rep(as_json, "gb");
  rep.json()["order"] = order.text();
  rep.json()["c"] = c;
  rep.json()["trunc"] = n;
  ordered_json basis = ordered_json::array();
  for (const PolyQ& f : gb.elements) basis.push_back(poly_str(f, c));
  rep.json()["basis"] = basis;
  rep.json()["initial_ideal"] = monomial_list_json(in_ideal.min_gens(), c);
  rep.line("order: " + order.text());
  rep.line("truncation: c=" + std::to_string(c) + ", n=" + std::to_string(n));
  rep.line("reduced basis (" + std::to_string(gb.elements.size()) + " elements):");
  for (const PolyQ& f : gb.elements) rep.line("  " + poly_str(f, c));
  rep.line("initial ideal: " + ideal_str(in_ideal, c));
  rep.emit();
  return 0;
}

int run_nf(const std::string& f_text, const std::string& gens_text, const std::string& order_spec,
           int c, int n, bool as_json) {
  const Truncation t{c, n};
  const Order order = Order::parse(order_spec);
  const PolyQ f = parse_polynomial(f_text, t);
  const std::vector<PolyQ> gens = parse_poly_list(gens_text, t);
  const PolyQ r = normal_form(f, gens, order);
  Report rep(as_json, "nf");
  rep.json()["order"] = order.text();
  rep.json()["normal_form"] = poly_str(r, c);
  rep.line(poly_str(r, c));
  rep.emit();
  return 0;
}

int run_initial(const std::string& gens_text, const std::string& order_spec, int c, int n,
                bool as_json) {
  const Truncation t{c, n};
  const Order order = Order::parse(order_spec);
  const MonomialIdeal ideal = initial_ideal(parse_poly_list(gens_text, t), order, t);
  Report rep(as_json, "initial");
  rep.json()["order"] = order.text();
  rep.json()["initial_ideal"] = monomial_list_json(ideal.min_gens(), c);
  rep.line(ideal_str(ideal, c));
  rep.emit();
  return 0;
}

int run_inc_exists(const std::string& points_text, int N, int n, bool as_json) {
  const bool found = exists_map_through(parse_points(points_text), N, n);
  Report rep(as_json, "inc-exists");
  rep.json()["exists"] = found;
  rep.line(found ? "true" : "false");
  rep.emit();
  return 0;
}

int run_inc_divides(const std::string& f_text, const std::string& g_text, int m, int n, int c,
                    bool as_json) {
  const Monomial f = parse_monomial(f_text, {c, m});
  const Monomial g = parse_monomial(g_text, {c, n});
  const auto witness = inc_divides(f, g, m, n);
  Report rep(as_json, "inc-divides");
  if (witness) {
    rep.json()["divides"] = true;
    rep.json()["p"] = witness->p.text();
    rep.json()["h"] = witness->h.str(c == 1);
    rep.line("true  p=" + witness->p.text() + "  h=" + witness->h.str(c == 1));
  } else {
    rep.json()["divides"] = false;
    rep.line("absent");
  }
  rep.emit();
  return 0;
}

int run_decompose(const std::string& map_text, int l, int m, int n, bool as_json) {
  const std::vector<int> images = parse_int_list(map_text);
  const int domain = l > 0 ? l : static_cast<int>(images.size());
  const auto [p1, p2] = decompose(IncMap(domain, images), domain, m, n);
  Report rep(as_json, "decompose");
  rep.json()["p1"] = p1.text();
  rep.json()["p2"] = p2.text();
  rep.line("p1=" + p1.text() + " (into [" + std::to_string(m) + "])");
  rep.line("p2=" + p2.text() + " (into [" + std::to_string(n) + "])");
  rep.emit();
  return 0;
}

BuchbergerOptions chain_options(int degree_bound) {
  BuchbergerOptions opts;
  opts.max_degree = degree_bound;
  return opts;
}

int run_chain_invariance(const std::string& chain_file, int horizon, int degree_bound,
                         bool as_json) {
  ChainContext ctx(ChainSpec::from_file(chain_file), chain_options(degree_bound));
  const InvarianceReport inv = is_inc_invariant(ctx, horizon);
  Report rep(as_json, "chain-invariance");
  rep.json()["horizon"] = horizon;
  rep.json()["invariant"] = inv.invariant;
  if (inv.invariant) {
    rep.line("invariant up to horizon " + std::to_string(horizon));
  } else {
    rep.json()["m"] = inv.m;
    rep.json()["n"] = inv.n;
    rep.json()["p"] = inv.p->text();
    rep.json()["generator"] = poly_str(*inv.generator, ctx.spec().c);
    rep.line("NOT invariant: " + inv.witness_text() + " (window " + std::to_string(inv.m) +
             " -> " + std::to_string(inv.n) + ")");
  }
  rep.emit();
  return inv.invariant ? 0 : 1;
}

int run_chain_stability(const std::string& chain_file, int horizon, int degree_bound,
                        bool as_json) {
  ChainContext ctx(ChainSpec::from_file(chain_file), chain_options(degree_bound));
  const StabilityReport sr = stability_index_upto(ctx, horizon);
  Report rep(as_json, "chain-stability");
  rep.json()["horizon"] = horizon;
  rep.json()["candidate_index"] =
      sr.candidate_index ? ordered_json(*sr.candidate_index) : ordered_json(nullptr);
  if (sr.candidate_index)
    rep.line("candidate stability index at horizon " + std::to_string(horizon) + ": " +
             std::to_string(*sr.candidate_index));
  else
    rep.line("no stability level found up to horizon " + std::to_string(horizon));
  rep.emit();
  return 0;
}

int run_chain_initial(const std::string& chain_file, const std::string& order_spec, int horizon,
                      int degree_bound, bool as_json) {
  ChainContext ctx(ChainSpec::from_file(chain_file), chain_options(degree_bound));
  const Order order = Order::parse(order_spec);
  const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, horizon);
  Report rep(as_json, "chain-initial");
  rep.json()["order"] = order.text();
  ordered_json levels = ordered_json::array();
  for (int i = 0; i < horizon; ++i) {
    levels.push_back(monomial_list_json(chain[i].min_gens(), ctx.spec().c));
    rep.line("in(J_" + std::to_string(i + 1) + ") = " + ideal_str(chain[i], ctx.spec().c));
  }
  rep.json()["initial_chain"] = levels;
  rep.emit();
  return 0;
}

int run_iset(const std::string& chain_file, const std::vector<std::string>& order_specs,
             const std::string& orders_keyword, int horizon, int max_cert, int degree_bound,
             bool as_json) {
  ChainContext ctx(ChainSpec::from_file(chain_file), chain_options(degree_bound));
  const std::vector<Order> orders = resolve_orders(order_specs, orders_keyword);
  if (max_cert <= 0) max_cert = horizon;
  const std::vector<ISetEntry> iset = compute_I_set(ctx, orders, horizon, max_cert);
  Report rep(as_json, "iset");
  rep.json()["horizon"] = horizon;
  if (ctx.spec().c >= 2) {
    rep.json()["note"] =
        "c >= 2: the family of compatible term orders is infinite; this run samples only the "
        "orders given on the command line";
    rep.line("note: c >= 2, sampled orders only (the compatible family is infinite)");
  }
  ordered_json entries = ordered_json::array();
  int max_index = 0;
  bool all_certified = true;
  for (const ISetEntry& e : iset) {
    ordered_json entry;
    entry["order"] = e.order.text();
    entry["candidate_index"] =
        e.report.candidate_index ? ordered_json(*e.report.candidate_index) : ordered_json(nullptr);
    entry["certified"] = e.report.certified;
    if (e.report.certificate_level) {
      entry["certificate_level"] = *e.report.certificate_level;
      entry["certified_bound"] = 2 * *e.report.certificate_level;
    }
    entries.push_back(entry);
    std::string line =
        e.order.text() + ": candidate=" +
        (e.report.candidate_index ? std::to_string(*e.report.candidate_index) : "none");
    if (e.report.certified)
      line += ", certified bound " + std::to_string(2 * *e.report.certificate_level) +
              " (identity at N=" + std::to_string(*e.report.certificate_level) + ")";
    else
      line += ", no certificate up to N=" + std::to_string(max_cert);
    rep.line(line);
    if (e.report.candidate_index) max_index = std::max(max_index, *e.report.candidate_index);
    all_certified = all_certified && e.report.certified;
  }
  rep.json()["orders"] = entries;
  rep.json()["max_candidate_index"] = max_index;
  rep.json()["all_certified"] = all_certified;
  rep.line("max candidate index: " + std::to_string(max_index));
  rep.emit();
  return 0;
}

int run_distinct_chains(const std::string& chain_file, const std::vector<std::string>& order_specs,
                        const std::string& orders_keyword, int horizon, int degree_bound,
                        bool as_json) {
  ChainContext ctx(ChainSpec::from_file(chain_file), chain_options(degree_bound));
  const std::vector<Order> orders = resolve_orders(order_specs, orders_keyword);
  const ChainPartition part = distinct_initial_chains(ctx, orders, horizon);
  Report rep(as_json, "distinct-chains");
  rep.json()["horizon"] = horizon;
  rep.json()["count"] = part.count;
  ordered_json groups = ordered_json::array();
  for (std::size_t g = 0; g < part.groups.size(); ++g) {
    ordered_json group;
    ordered_json members = ordered_json::array();
    std::string names;
    for (int idx : part.groups[g]) {
      members.push_back(orders[idx].text());
      if (!names.empty()) names += ", ";
      names += orders[idx].text();
    }
    group["orders"] = members;
    group["certified"] = part.group_certified[g];
    groups.push_back(group);
    rep.line("class: {" + names + "}" + (part.group_certified[g] ? " [certified]" : ""));
  }
  rep.json()["groups"] = groups;
  rep.line("distinct initial chains to horizon " + std::to_string(horizon) + ": " +
           std::to_string(part.count));
  rep.emit();
  return 0;
}

int run_intersect(const std::string& gens_text, int c, int n, const std::string& cols_text,
                  bool as_json) {
  const Truncation t{c, n};
  const std::vector<PolyQ> inter =
      intersect_with_columns(parse_poly_list(gens_text, t), t, parse_int_list(cols_text));
  Report rep(as_json, "intersect");
  ordered_json arr = ordered_json::array();
  for (const PolyQ& f : inter) arr.push_back(poly_str(f, c));
  rep.json()["generators"] = arr;
  if (inter.empty()) rep.line("0");
  for (const PolyQ& f : inter) rep.line(poly_str(f, c));
  rep.emit();
  return 0;
}

int run_compat_check(const std::string& order_spec, int c, int n, int deg, bool as_json) {
  const Order order = Order::parse(order_spec);
  const CompatReport cr = check_inc_compatibility(order, {c, n}, deg);
  Report rep(as_json, "compat-check");
  rep.json()["order"] = order.text();
  rep.json()["n"] = n;
  rep.json()["deg"] = deg;
  rep.json()["compatible"] = cr.compatible;
  if (cr.compatible) {
    rep.line("compatible (n=" + std::to_string(n) + ", deg<=" + std::to_string(deg) + ")");
  } else {
    rep.json()["f"] = cr.f->str(c == 1);
    rep.json()["g"] = cr.g->str(c == 1);
    rep.json()["p"] = cr.p->text();
    rep.line("violation: " + cr.witness_text());
  }
  rep.emit();
  return cr.compatible ? 0 : 1;
}

int run_axioms_check(const std::string& order_spec, int c, int n, int deg, bool as_json) {
  const Order order = Order::parse(order_spec);
  const AxiomReport ar = check_preorder_axioms(order, {c, n}, deg);
  Report rep(as_json, "axioms-check");
  rep.json()["order"] = order.text();
  auto put = [&rep](const std::string& name, bool ok, const std::optional<std::string>& witness) {
    rep.json()[name] = ok;
    rep.line(name + ": " + (ok ? "pass" : "FAIL" + (witness ? " (" + *witness + ")" : "")));
  };
  put("irreflexive", ar.irreflexive, ar.irreflexive_witness);
  put("asymmetric", ar.asymmetric, ar.asymmetric_witness);
  put("transitive", ar.transitive, ar.transitive_witness);
  put("multiplicative", ar.multiplicative, ar.multiplicative_witness);
  put("cancellative", ar.cancellative, ar.cancellative_witness);
  put("incomparability_transitive", ar.incomparability_transitive, ar.incomparability_witness);
  rep.json()["total"] = ar.total;
  rep.json()["one_minimal"] = ar.one_minimal;
  rep.line(std::string("total: ") + (ar.total ? "yes" : "no"));
  rep.line(std::string("1-minimal: ") + (ar.one_minimal ? "yes" : "no"));
  rep.emit();
  return ar.axioms_pass() ? 0 : 1;
}

int run_classify_r4(const std::string& order_spec, int deg, bool as_json) {
  const Order order = Order::parse(order_spec);
  const std::string name = identify_order_on_r4(order, deg);
  Report rep(as_json, "classify-r4");
  rep.json()["order"] = order.text();
  rep.json()["classification"] = name;
  rep.line(name);
  rep.emit();
  return 0;
}

int run_oracle_initial(const std::string& gens_text, const std::string& order_spec, int c, int n,
                       int deg, const std::string& field, bool as_json) {
  const Truncation t{c, n};
  const Order order = Order::parse(order_spec);
  const std::vector<PolyQ> gens = parse_poly_list(gens_text, t);
  Report rep(as_json, "oracle-initial");
  rep.json()["order"] = order.text();
  rep.json()["degree"] = deg;

  if (field == "q") {
    const GradedPiece<Rational> piece = graded_piece(gens, t, deg);
    const InitialSpace<Rational> space = initial_space(order, piece);
    rep.json()["field"] = "q";
    rep.json()["piece_dimension"] = piece.dimension();
    rep.line("piece dimension: " + std::to_string(piece.dimension()));
    if (space.total) {
      rep.json()["pivots"] = monomial_list_json(space.pivots, c);
      rep.line("pivot monomials:");
      for (const Monomial& m : space.pivots) rep.line("  " + m.str(c == 1));
    } else {
      ordered_json forms = ordered_json::array();
      rep.line("leading-form span (refinement echelon; validated by the GF(2) enumeration suite):");
      for (const PolyQ& f : space.leading_forms) {
        forms.push_back(poly_str(f, c));
        rep.line("  " + poly_str(f, c));
      }
      rep.json()["leading_forms"] = forms;
      rep.json()["method_note"] = "refinement echelon; validated by the GF(2) enumeration suite";
    }
  } else if (field.rfind("gf:", 0) == 0) {
    GFp::set_modulus(static_cast<std::uint32_t>(std::stoul(field.substr(3))));
    std::vector<Polynomial<GFp>> ggens;
    for (const PolyQ& f : gens) ggens.push_back(to_gfp(f));
    const GradedPiece<GFp> piece = graded_piece(ggens, t, deg);
    const InitialSpace<GFp> space = initial_space(order, piece);
    rep.json()["field"] = field;
    rep.json()["piece_dimension"] = piece.dimension();
    rep.line("piece dimension: " + std::to_string(piece.dimension()));
    if (space.total) {
      rep.json()["pivots"] = monomial_list_json(space.pivots, c);
      for (const Monomial& m : space.pivots) rep.line("  " + m.str(c == 1));
    } else {
      ordered_json forms = ordered_json::array();
      for (const Polynomial<GFp>& f : space.leading_forms) {
        forms.push_back(f.str(c == 1));
        rep.line("  " + f.str(c == 1));
      }
      rep.json()["leading_forms"] = forms;
    }
  } else {
    throw std::invalid_argument("--field accepts 'q' or 'gf:<p>'");
  }
  rep.emit();
  return 0;
}

// ---------------------------------------------------------------------------
// experiments
// ---------------------------------------------------------------------------

class ClaimSet {
 public:
  explicit ClaimSet(Report& rep) : rep_(rep) {}
  void check(const std::string& text, bool ok) {
    rep_.line(std::string(ok ? "[ok]   " : "[FAIL] ") + text);
    claims_.push_back({text, ok});
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }
  ordered_json to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& [text, ok] : claims_) {
      ordered_json c;
      c["claim"] = text;
      c["ok"] = ok;
      arr.push_back(c);
    }
    return arr;
  }

 private:
  Report& rep_;
  std::vector<std::pair<std::string, bool>> claims_;
  bool all_ok_ = true;
};

ChainSpec linear_seed_chain() {
  return ChainSpec::seeded(1, 4, {parse_polynomial("x1+x3", {1, 4})});
}

std::vector<PolyQ> orbit_cubics(int n) {
  std::vector<PolyQ> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PolyQ f;
      f.add_term(Monomial::var(1, i, 2) * Monomial::var(1, j), make_rational(1));
      f.add_term(Monomial::var(1, i) * Monomial::var(1, j, 2), make_rational(1));
      out.push_back(f);
    }
  return out;
}

int run_experiment_remark32(const std::string& order_spec, int horizon, bool as_json) {
  Report rep(as_json, "experiment remark32");
  ClaimSet claims(rep);
  const Order order = Order::parse(order_spec.empty() ? "degmax:2" : order_spec);
  rep.line("chain: J_4 = <x1+x3> spread equivariantly; order " + order.text());
  ChainContext ctx(linear_seed_chain());

  const MonomialIdeal& in4 = ctx.initial_ideal_at(order, 4);
  claims.check("in(J_4) = <x3>", in4 == MonomialIdeal({1, 4}, {Monomial::var(1, 3)}));
  const MonomialIdeal& in5 = ctx.initial_ideal_at(order, 5);
  claims.check("x2 lies in in(J_5)", in5.contains(Monomial::var(1, 2)));

  const StabilityReport init_rep = initial_chain_index_upto(ctx, order, horizon);
  claims.check("initial-chain candidate index at horizon " + std::to_string(horizon) +
                   " is at least 5 (chain index is 4)",
               init_rep.candidate_index && *init_rep.candidate_index >= 5);
  if (init_rep.candidate_index)
    rep.line("candidate index: " + std::to_string(*init_rep.candidate_index));

  const StabilityReport chain_rep = stability_index_upto(ctx, 8);
  int cert_level = 0;
  for (int N = chain_rep.candidate_index.value_or(4); N <= 8 && cert_level == 0; ++N) {
    const StabilityReport cr = certify_initial_stability(ctx, order, N);
    if (cr.certified) cert_level = N;
  }
  claims.check("2N stability certificate obtained at some N <= 8", cert_level != 0);
  if (cert_level != 0) {
    rep.line("certificate: identity at N=" + std::to_string(cert_level) + ", certified bound " +
             std::to_string(2 * cert_level));
    const int spot_horizon = 12;
    const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, spot_horizon);
    bool spot = true;
    for (int n = 2 * cert_level; n <= spot_horizon; ++n) {
      const MonomialIdeal spread(
          ctx.trunc(n), spread_monomials(chain[2 * cert_level - 1].min_gens(), 2 * cert_level, n));
      spot = spot && spread == chain[n - 1];
    }
    claims.check("certificate spot-verified to horizon 12", spot);
  }
  rep.json()["claims"] = claims.to_json();
  rep.json()["all_ok"] = claims.all_ok();
  rep.emit();
  return claims.all_ok() ? 0 : 1;
}

int run_experiment_remark35(bool as_json) {
  Report rep(as_json, "experiment remark35");
  ClaimSet claims(rep);
  rep.line("ideal: orbit spread of x1^2*x2 + x1*x2^2; lex orders along reversed prefixes");
  for (const auto& [n, np] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
    const int trunc_n = np + 1;
    const std::vector<PolyQ> gens = orbit_cubics(trunc_n);
    const Monomial probe = Monomial::var(1, 1, 2) * Monomial::var(1, np);
    const Order sig_n = Order::permuted_lex(Permutation::reversal(n));
    const Order sig_np = Order::permuted_lex(Permutation::reversal(np));
    const bool in_n = monomial_in_initial(sig_n, gens, {1, trunc_n}, probe);
    const bool in_np = monomial_in_initial(sig_np, gens, {1, trunc_n}, probe);
    const std::string tag = "(n=" + std::to_string(n) + ", n'=" + std::to_string(np) + ")";
    claims.check("x1^2*x" + std::to_string(np) + " in the initial space under sigma_" +
                     std::to_string(n) + " " + tag,
                 in_n);
    claims.check("x1^2*x" + std::to_string(np) + " NOT in the initial space under sigma_" +
                     std::to_string(np) + " " + tag,
                 !in_np);
  }
  rep.json()["claims"] = claims.to_json();
  rep.json()["all_ok"] = claims.all_ok();
  rep.emit();
  return claims.all_ok() ? 0 : 1;
}

int run_experiment_remark45(bool as_json) {
  Report rep(as_json, "experiment remark45");
  ClaimSet claims(rep);
  rep.line("ideal: orbit spread of x1^2*x2 + x1*x2^2; max-type preorders");
  const int n = 2, np = 3;
  const std::vector<PolyQ> gens = orbit_cubics(np);
  const Monomial probe = Monomial::var(1, 1) * Monomial::var(1, n, 2);  // x1 x2^2
  claims.check("x1*x2^2 in the Max(2) initial space",
               monomial_in_initial(Order::named(Family::Max, n), gens, {1, np}, probe));
  claims.check("x1*x2^2 NOT in the Max(3) initial space",
               !monomial_in_initial(Order::named(Family::Max, np), gens, {1, np}, probe));
  rep.json()["claims"] = claims.to_json();
  rep.json()["all_ok"] = claims.all_ok();
  rep.emit();
  return claims.all_ok() ? 0 : 1;
}

int run_experiment_six_orders(int n, int deg, bool as_json) {
  Report rep(as_json, "experiment six-orders");
  ClaimSet claims(rep);
  const std::vector<Order> six = six_term_orders();
  for (const Order& o : six) {
    const AxiomReport ar = check_preorder_axioms(o, {1, n}, deg);
    claims.check(o.text() + ": term-order axioms (n=" + std::to_string(n) + ", deg<=" +
                     std::to_string(deg) + ")",
                 ar.axioms_pass() && ar.total && ar.one_minimal);
    claims.check(o.text() + ": inc compatibility",
                 check_inc_compatibility(o, {1, n}, deg).compatible);
  }
  const std::vector<Monomial> monos = monomials_up_to_degree({1, 4}, 3);
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      bool found = false;
      for (const Monomial& f : monos) {
        for (const Monomial& g : monos)
          if (six[i].compare(f, g) != six[j].compare(f, g)) {
            ordered_json pair;
            pair["orders"] = {six[i].text(), six[j].text()};
            pair["f"] = f.str(true);
            pair["g"] = g.str(true);
            pairs.push_back(pair);
            rep.line("  " + six[i].text() + " vs " + six[j].text() + ": split by (" + f.str(true) +
                     ", " + g.str(true) + ")");
            found = true;
            break;
          }
        if (found) break;
      }
      claims.check(six[i].text() + " and " + six[j].text() + " distinguished at degree <= 3",
                   found);
    }
  rep.json()["distinguishing_pairs"] = pairs;
  rep.json()["claims"] = claims.to_json();
  rep.json()["all_ok"] = claims.all_ok();
  rep.emit();
  return claims.all_ok() ? 0 : 1;
}

int run_experiment_remark44(bool as_json) {
  Report rep(as_json, "experiment remark44");
  ClaimSet claims(rep);
  const Order a2 = Order::parse("matrix-sqrt:2:[[1,s]]");
  const Order a3 = Order::parse("matrix-sqrt:3:[[1,s]]");
  const Order b2 = Order::parse("matrix-sqrt:2:[[1,1,1],[1+s,-1,-s]]");
  const Order b3 = Order::parse("matrix-sqrt:3:[[1,1,1],[1+s,-1,-s]]");

  claims.check("[[1,s]] (d=2) total on R_2 up to degree 6", totality_check(a2, {1, 2}, 6));
  claims.check("[[1,1,1],[1+s,-1,-s]] (d=2) total on R_3 up to degree 6",
               totality_check(b2, {1, 3}, 6));
  claims.check("[[1,s]] (d=2) compatible within R_2",
               check_inc_compatibility(a2, {1, 2}, 4).compatible);
  claims.check("[[1,1,1],[1+s,-1,-s]] (d=2) compatible within R_3",
               check_inc_compatibility(b2, {1, 3}, 3).compatible);

  // exhibit a pair ordered differently for d=2 and d=3
  const std::vector<Monomial> monos = monomials_up_to_degree({1, 2}, 6);
  bool split = false;
  for (const Monomial& f : monos) {
    for (const Monomial& g : monos)
      if (a2.compare(f, g) != a3.compare(f, g)) {
        rep.line("d=2 vs d=3 split on (" + f.str(true) + ", " + g.str(true) + "): " +
                 cmp_str(a2.compare(f, g)) + " vs " + cmp_str(a3.compare(f, g)));
        rep.json()["split_pair"] = {f.str(true), g.str(true)};
        split = true;
        break;
      }
    if (split) break;
  }
  claims.check("d=2 and d=3 orders differ on an exhibited pair", split);

  // the first disagreeing pair of the two-row orders lives in degree 7:
  // exponent difference (1,-7,6), so search a little further out
  bool split_b = false;
  const std::vector<Monomial> monos3 = monomials_up_to_degree({1, 3}, 8);
  for (const Monomial& f : monos3) {
    for (const Monomial& g : monos3)
      if (b2.compare(f, g) != b3.compare(f, g)) {
        rep.line("rank-2 case splits on (" + f.str(true) + ", " + g.str(true) + "): " +
                 cmp_str(b2.compare(f, g)) + " vs " + cmp_str(b3.compare(f, g)));
        rep.json()["split_pair_rank2"] = {f.str(true), g.str(true)};
        split_b = true;
        break;
      }
    if (split_b) break;
  }
  claims.check("the two-row orders for d=2 and d=3 differ as well", split_b);
  rep.json()["claims"] = claims.to_json();
  rep.json()["all_ok"] = claims.all_ok();
  rep.emit();
  return claims.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equichain: exact Groebner and stability computations for Inc-invariant ideal "
               "chains in truncated polynomial rings"};
  app.require_subcommand(1);

  std::string gens_text, f_text, g_text, order_spec, orders_keyword, chain_file, points_text,
      cols_text, map_text, field = "q";
  std::vector<std::string> order_specs;
  int c = 1, trunc_n = 0, deg = 3, horizon = 10, N = 0, nn = 0, m = 0, l = 0, max_cert = 0,
      degree_bound = 0;
  bool as_json = false, chain_criterion = false;

  std::function<int()> action;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit a JSON report"); };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis and initial ideal");
  gb->add_option("--gens", gens_text, "generators, ';'-separated")->required();
  gb->add_option("--order", order_spec, "term order spec")->required();
  gb->add_option("--trunc", trunc_n, "truncation level n")->required();
  gb->add_option("--c", c, "rows of the variable grid (default 1)");
  gb->add_flag("--chain-criterion", chain_criterion, "enable the chain criterion");
  add_json(gb);
  gb->callback([&] {
    action = [&] { return run_gb(gens_text, order_spec, c, trunc_n, chain_criterion, as_json); };
  });

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial against a basis");
  nf->add_option("--f", f_text, "polynomial")->required();
  nf->add_option("--gens", gens_text, "reducers, ';'-separated")->required();
  nf->add_option("--order", order_spec, "term order spec")->required();
  nf->add_option("--trunc", trunc_n, "truncation level n")->required();
  nf->add_option("--c", c, "rows of the variable grid");
  add_json(nf);
  nf->callback([&] {
    action = [&] { return run_nf(f_text, gens_text, order_spec, c, trunc_n, as_json); };
  });

  auto* initial = app.add_subcommand("initial", "initial ideal of an ideal");
  initial->add_option("--gens", gens_text)->required();
  initial->add_option("--order", order_spec)->required();
  initial->add_option("--trunc", trunc_n)->required();
  initial->add_option("--c", c);
  add_json(initial);
  initial->callback([&] {
    action = [&] { return run_initial(gens_text, order_spec, c, trunc_n, as_json); };
  });

  auto* ie = app.add_subcommand("inc-exists", "increasing map through prescribed points");
  ie->add_option("--points", points_text, "i:j pairs, e.g. 1:2,4:5")->required();
  ie->add_option("--N", N, "domain window bound")->required();
  ie->add_option("--n", nn, "codomain window bound")->required();
  add_json(ie);
  ie->callback([&] { action = [&] { return run_inc_exists(points_text, N, nn, as_json); }; });

  auto* idiv = app.add_subcommand("inc-divides", "monomial divisibility up to the inc action");
  idiv->add_option("--f", f_text, "divisor monomial")->required();
  idiv->add_option("--g", g_text, "dividend monomial")->required();
  idiv->add_option("--m", m, "window of f")->required();
  idiv->add_option("--n", nn, "window of g")->required();
  idiv->add_option("--c", c);
  add_json(idiv);
  idiv->callback([&] {
    action = [&] { return run_inc_divides(f_text, g_text, m, nn, c, as_json); };
  });

  auto* dec = app.add_subcommand("decompose", "factor a map through an intermediate window");
  dec->add_option("--map", map_text, "images p(1),...,p(l)")->required();
  dec->add_option("--l", l, "domain bound (default: length of --map)");
  dec->add_option("--m", m, "intermediate window")->required();
  dec->add_option("--n", nn, "outer window")->required();
  add_json(dec);
  dec->callback([&] { action = [&] { return run_decompose(map_text, l, m, nn, as_json); }; });

  auto* cinv = app.add_subcommand("chain-invariance", "verify windowed orbit containment");
  cinv->add_option("--chain", chain_file, "chain spec file")->required();
  cinv->add_option("--horizon", horizon, "highest level checked");
  cinv->add_option("--degree-bound", degree_bound, "abort if basis completion exceeds this degree");
  add_json(cinv);
  cinv->callback([&] {
    action = [&] { return run_chain_invariance(chain_file, horizon, degree_bound, as_json); };
  });

  auto* cstab = app.add_subcommand("chain-stability", "candidate stability index of a chain");
  cstab->add_option("--chain", chain_file)->required();
  cstab->add_option("--horizon", horizon);
  cstab->add_option("--degree-bound", degree_bound);
  add_json(cstab);
  cstab->callback([&] {
    action = [&] { return run_chain_stability(chain_file, horizon, degree_bound, as_json); };
  });

  auto* cini = app.add_subcommand("chain-initial", "initial-ideal chain of a chain");
  cini->add_option("--chain", chain_file)->required();
  cini->add_option("--order", order_spec)->required();
  cini->add_option("--horizon", horizon);
  cini->add_option("--degree-bound", degree_bound);
  add_json(cini);
  cini->callback([&] {
    action = [&] { return run_chain_initial(chain_file, order_spec, horizon, degree_bound, as_json); };
  });

  auto* iset = app.add_subcommand("iset", "stability indices of initial chains per order");
  iset->add_option("--chain", chain_file)->required();
  iset->add_option("--order", order_specs, "order spec (repeatable)");
  iset->add_option("--orders", orders_keyword, "'all-six' for the c=1 catalogue");
  iset->add_option("--horizon", horizon);
  iset->add_option("--max-cert", max_cert, "largest N tried for the 2N certificate");
  iset->add_option("--degree-bound", degree_bound);
  add_json(iset);
  iset->callback([&] {
    action = [&] {
      return run_iset(chain_file, order_specs, orders_keyword, horizon, max_cert, degree_bound,
                      as_json);
    };
  });

  auto* dch = app.add_subcommand("distinct-chains", "partition orders by initial chain");
  dch->add_option("--chain", chain_file)->required();
  dch->add_option("--order", order_specs);
  dch->add_option("--orders", orders_keyword);
  dch->add_option("--horizon", horizon);
  dch->add_option("--degree-bound", degree_bound);
  add_json(dch);
  dch->callback([&] {
    action = [&] {
      return run_distinct_chains(chain_file, order_specs, orders_keyword, horizon, degree_bound,
                                 as_json);
    };
  });

  auto* inter = app.add_subcommand("intersect", "intersection with a column subring");
  inter->add_option("--gens", gens_text)->required();
  inter->add_option("--trunc", trunc_n)->required();
  inter->add_option("--cols", cols_text, "columns kept, e.g. 1,2")->required();
  inter->add_option("--c", c);
  add_json(inter);
  inter->callback([&] {
    action = [&] { return run_intersect(gens_text, c, trunc_n, cols_text, as_json); };
  });

  auto* compat = app.add_subcommand("compat-check", "inc compatibility to bounds");
  compat->add_option("--order", order_spec)->required();
  compat->add_option("--n", trunc_n, "window bound (default 5)")->default_val(5);
  compat->add_option("--deg", deg, "degree bound (default 3)");
  compat->add_option("--c", c);
  add_json(compat);
  compat->callback([&] {
    action = [&] { return run_compat_check(order_spec, c, trunc_n, deg, as_json); };
  });

  auto* axioms = app.add_subcommand("axioms-check", "monomial preorder axioms to bounds");
  axioms->add_option("--order", order_spec)->required();
  axioms->add_option("--n", trunc_n)->default_val(4);
  axioms->add_option("--deg", deg);
  axioms->add_option("--c", c);
  add_json(axioms);
  axioms->callback([&] {
    action = [&] { return run_axioms_check(order_spec, c, trunc_n, deg, as_json); };
  });

  auto* cls = app.add_subcommand("classify-r4", "behavioral match against the named catalogue");
  cls->add_option("--order", order_spec)->required();
  cls->add_option("--deg", deg)->default_val(4);
  add_json(cls);
  cls->callback([&] { action = [&] { return run_classify_r4(order_spec, deg, as_json); }; });

  auto* oracle = app.add_subcommand("oracle-initial", "degree slice of the initial space");
  oracle->add_option("--gens", gens_text)->required();
  oracle->add_option("--order", order_spec)->required();
  oracle->add_option("--trunc", trunc_n)->required();
  oracle->add_option("--deg", deg)->required();
  oracle->add_option("--c", c);
  oracle->add_option("--field", field, "q (default) or gf:<p>");
  add_json(oracle);
  oracle->callback([&] {
    action = [&] {
      return run_oracle_initial(gens_text, order_spec, c, trunc_n, deg, field, as_json);
    };
  });

  auto* exp = app.add_subcommand("experiment", "scripted reproductions");
  std::string which;
  exp->add_option("name", which, "remark32 | remark35 | remark45 | six-orders | remark44")
      ->required();
  exp->add_option("--order", order_spec);
  exp->add_option("--horizon", horizon);
  exp->add_option("--n", trunc_n, "window bound for six-orders (default 5)")->default_val(5);
  exp->add_option("--deg", deg, "degree bound for six-orders (default 3)");
  add_json(exp);
  exp->callback([&] {
    action = [&] {
      if (which == "remark32") return run_experiment_remark32(order_spec, horizon, as_json);
      if (which == "remark35") return run_experiment_remark35(as_json);
      if (which == "remark45") return run_experiment_remark45(as_json);
      if (which == "six-orders") return run_experiment_six_orders(trunc_n, deg, as_json);
      if (which == "remark44") return run_experiment_remark44(as_json);
      throw std::invalid_argument("unknown experiment '" + which + "'");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
