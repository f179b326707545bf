// psdrank: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error,
// 3 search budget, enumeration cap or retry limit exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psdrank/cutpoly/cutpoly.hpp"
#include "psdrank/embed/embedding.hpp"
#include "psdrank/exact/elimination.hpp"
#include "psdrank/exact/matrix_io.hpp"
#include "psdrank/io/json.hpp"
#include "psdrank/pattern/rectangle_cover.hpp"
#include "psdrank/pattern/triangular.hpp"
#include "psdrank/psd/barvinok.hpp"
#include "psdrank/psd/order3.hpp"
#include "psdrank/psd/realize.hpp"
#include "psdrank/util/parallel.hpp"

namespace {

using namespace psdrank;
using json_io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  unsigned threads = 0;
};

Globals g;

unsigned threads() { return g.threads > 0 ? g.threads : default_threads(); }

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Matrices are accepted in the text format or as a JSON matrix document.
ExactMatrix load_matrix(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return json_io::matrix_from_json(json::parse(text));
  return parse_matrix(text);
}

json load_json(const std::string& path) { return json::parse(slurp(path)); }

BipartiteGraph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_graph(in);
}

// Parses "3,4,5,6" or "3-6" (1-based) into 0-based indices.
std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t limit) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    std::size_t lo = 0;
    std::size_t hi = 0;
    try {
      lo = std::stoul(item.substr(0, dash));
      hi = dash == std::string::npos ? lo : std::stoul(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw UsageError("bad index list '" + text + "'");
    }
    if (lo < 1 || hi < lo || hi > limit) throw UsageError("index out of range in '" + text + "'");
    for (std::size_t i = lo; i <= hi; ++i) out.push_back(i - 1);
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

json one_based(const std::vector<std::size_t>& v) {
  json j = json::array();
  for (auto i : v) j.push_back(i + 1);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json tagged(const std::string& command) { return {{"schema", json_io::kSchemaVersion}, {"command", command}}; }

std::string cover_text(const CoverResult& r) {
  if (r.exact) return std::to_string(r.upper);
  return "unknown, bounds [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

// ---------------------------------------------------------------- commands

int cmd_rank(const std::string& path) {
  const std::size_t r = rank(load_matrix(path));
  if (g.json) {
    json j = tagged("rank");
    j["rank"] = r;
    emit(j);
  } else {
    std::cout << r << "\n";
  }
  return kOk;
}

int cmd_trirank(const std::string& path) {
  const TriangularResult t = triangular_rank_with_witness(support(load_matrix(path)));
  if (g.json) {
    json j = tagged("trirank");
    j["triangular_rank"] = t.rank;
    json seq = json::array();
    for (auto [k, l] : t.sequence) seq.push_back({k + 1, l + 1});
    j["sequence"] = seq;
    emit(j);
  } else {
    std::cout << t.rank << "\n";
  }
  return kOk;
}

int cmd_boolrank(const std::string& path, std::uint64_t budget) {
  const CoverResult r = boolean_rank(support(load_matrix(path)), budget);
  if (g.json) {
    json j = json_io::cover_to_json(r);
    j["command"] = "boolrank";
    emit(j);
  } else {
    std::cout << cover_text(r) << "\n";
  }
  return r.exact ? kOk : kExhausted;
}

int cmd_bounds(const std::string& path, std::uint64_t budget, std::size_t sqrt_cap) {
  const ExactMatrix s = load_matrix(path);
  const SupportPattern m = support(s);
  const std::size_t rk = rank(s);
  const std::size_t tri = triangular_rank(m);
  const CoverResult br = boolean_rank(m, budget);
  const EmbeddingRankBounds eb = embrkl_bounds(s);

  bool nonnegative = true;
  for (const auto& x : s.data()) nonnegative = nonnegative && x >= 0;
  std::optional<Order3Certificate> cert;
  if (nonnegative) {
    Order3Options opts;
    opts.cap = sqrt_cap;
    opts.threads = threads();
    cert = order3_exclusion(s, opts);
  }
  std::size_t psd_lower = tri;
  std::string psd_source = "triangular_rank";
  if (cert && cert->conclusive && cert->bound > psd_lower) {
    psd_lower = cert->bound;
    psd_source = "order3_exclusion";
  }

  if (g.json) {
    json j = tagged("bounds");
    j["source"] = path.empty() ? "-" : path;
    j["rows"] = s.rows();
    j["cols"] = s.cols();
    j["rank"] = {{"value", rk}, {"by", "rank"}};
    j["triangular_rank"] = {{"value", tri}, {"by", "triangular_rank"}};
    j["boolean_rank"] = {{"exact", br.exact}, {"lower", br.lower}, {"upper", br.upper}, {"by", "boolean_rank"}};
    j["embrkl"] = {{"lower", eb.lower}, {"upper", eb.upper}, {"by", "embrkl_bounds"}};
    j["psd_rank_lower"] = {{"value", psd_lower}, {"by", psd_source}};
    if (cert) j["order3"] = json_io::certificate_to_json(*cert);
    emit(j);
  } else {
    std::cout << "matrix           " << s.rows() << " x " << s.cols() << "\n"
              << "rank             " << rk << "\n"
              << "triangular rank  " << tri << "\n"
              << "boolean rank     " << cover_text(br) << "\n"
              << "embrkl           [" << eb.lower << ", " << eb.upper << "]\n"
              << "psd rank >=      " << psd_lower << "  (" << psd_source << ")\n";
    if (cert) std::cout << "order-3 test     " << (cert->conclusive ? cert->claim : "inconclusive: " + cert->reason) << "\n";
  }
  return kOk;
}

int cmd_embed_from_rank(const std::string& path) {
  emit(json_io::embedding_to_json(embedding_from_rank_factorization(load_matrix(path))));
  return kOk;
}

int cmd_embed_from_psd(const std::string& path) {
  const PsdFactorization f = json_io::factorization_from_json(load_json(path));
  for (const auto* side : {&f.A, &f.B})
    for (const auto& x : *side)
      if (!is_psd(x)) {
        std::cerr << "psdrank: factorization has a factor that is not psd\n";
        return kVerifyFailed;
      }
  emit(json_io::embedding_to_json(embedding_from_psd(f)));
  return kOk;
}

int cmd_psd_from_embedding(const std::string& path) {
  const EmbeddingFactorization ef = psd_from_embedding(json_io::embedding_from_json(load_json(path)));
  json j = json_io::factorization_to_json(ef.factorization);
  j["T"] = json_io::matrix_to_json(ef.T);
  emit(j);
  return kOk;
}

int cmd_verify_psd(const std::string& path, const std::string& matrix_path) {
  const json doc = load_json(path);
  const PsdFactorization f = json_io::factorization_from_json(doc);
  ExactMatrix s;
  if (!matrix_path.empty()) {
    s = load_matrix(matrix_path);
  } else if (doc.contains("T")) {
    s = json_io::matrix_from_json(doc.at("T"));
  } else {
    throw UsageError("verify psd: pass --matrix or a factorization with a \"T\" field");
  }
  const FactorizationReport r = verify_psd_factorization(f, s);
  if (g.json) {
    json j = tagged("verify psd");
    j["passed"] = r.passed;
    j["a_psd"] = r.a_psd;
    j["b_psd"] = r.b_psd;
    json mm = json::array();
    for (auto [k, l] : r.mismatches) mm.push_back({k + 1, l + 1});
    j["mismatches"] = mm;
    emit(j);
  } else {
    std::cout << (r.passed ? "pass" : "FAIL") << "\n";
    for (std::size_t k = 0; k < r.a_psd.size(); ++k)
      if (!r.a_psd[k]) std::cout << "A_" << k + 1 << " is not psd\n";
    for (std::size_t l = 0; l < r.b_psd.size(); ++l)
      if (!r.b_psd[l]) std::cout << "B_" << l + 1 << " is not psd\n";
    for (auto [k, l] : r.mismatches) std::cout << "tr(A_" << k + 1 << " B_" << l + 1 << ") != S(" << k + 1 << "," << l + 1 << ")\n";
  }
  return r.passed ? kOk : kVerifyFailed;
}

int cmd_verify_embedding(const std::string& path, const std::string& matrix_path) {
  if (matrix_path.empty()) throw UsageError("verify embedding: --matrix is required");
  const bool ok = verify_embedding(json_io::embedding_from_json(load_json(path)), support(load_matrix(matrix_path)));
  if (g.json) {
    json j = tagged("verify embedding");
    j["passed"] = ok;
    emit(j);
  } else {
    std::cout << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_realize(const std::string& path, std::uint64_t seed, int tries) {
  if (tries < 1) throw UsageError("--tries must be positive");
  const PsdFactorization f = json_io::factorization_from_json(load_json(path));
  for (const auto* side : {&f.A, &f.B})
    for (const auto& x : *side)
      if (!is_psd(x)) {
        std::cerr << "psdrank: factorization has a factor that is not psd\n";
        return kVerifyFailed;
      }
  RealizeOptions opts;
  opts.seed = seed;
  opts.max_tries = tries;
  const RealizeResult r = realize_support(f, opts);
  if (g.json) {
    json j = json_io::realize_to_json(r);
    j["command"] = "realize-support";
    emit(j);
  } else if (r.success) {
    write_matrix(std::cout, r.T);
  } else {
    std::cerr << "psdrank: no sample realized the support in " << r.tries << " tries\n";
  }
  return r.success ? kOk : kExhausted;
}

int cmd_sqrt_bound(const std::string& path, const std::string& rows, const std::string& cols, bool no_sign_fix,
                   std::size_t cap) {
  const ExactMatrix s = load_matrix(path);
  SqrtRankOptions opts;
  opts.fix_sign = !no_sign_fix;
  opts.cap = cap;
  opts.threads = threads();
  const auto r = min_sqrt_rank(s, parse_index_list(rows, s.rows()), parse_index_list(cols, s.cols()), opts);
  if (g.json) {
    json j = json_io::sqrt_rank_to_json(r);
    j["command"] = "sqrt-bound";
    emit(j);
  } else {
    std::cout << r.min_rank << "\n";
  }
  return kOk;
}

int cmd_order3(const std::string& path, const std::string& rows, const std::string& cols, bool no_sign_fix,
               std::size_t cap) {
  const ExactMatrix s = load_matrix(path);
  Order3Options opts;
  opts.fix_sign = !no_sign_fix;
  opts.cap = cap;
  opts.threads = threads();
  if (!rows.empty()) opts.rows = parse_index_list(rows, s.rows());
  if (!cols.empty()) opts.cols = parse_index_list(cols, s.cols());
  const Order3Certificate c = order3_exclusion(s, opts);
  if (g.json) {
    json j = json_io::certificate_to_json(c);
    j["command"] = "order3-exclude";
    emit(j);
  } else if (c.conclusive) {
    std::cout << c.claim << "\n"
              << "rows " << one_based(c.rows).dump() << " cols " << one_based(c.cols).dump() << "\n"
              << c.enumeration->assignments_checked << " sign assignments, minimum rank "
              << c.enumeration->min_rank << "\n";
  } else {
    std::cout << "inconclusive: " << c.reason << "\n";
  }
  return kOk;
}

int cmd_reduce_rank(const std::string& path, double tol) {
  const FloatFactorization f = json_io::float_factorization_from_json(load_json(path));
  Eigen::MatrixXd s(f.A.size(), f.B.size());
  for (std::size_t k = 0; k < f.A.size(); ++k)
    for (std::size_t l = 0; l < f.B.size(); ++l)
      s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = (f.A[k] * f.B[l]).trace();
  ReductionOptions opts;
  opts.rank_tol = tol;
  const FactorRankReport r = reduce_factor_ranks(f, s, opts);
  if (g.json) {
    json j = json_io::factor_rank_report_to_json(r);
    j["command"] = "reduce-rank";
    emit(j);
  } else {
    auto list = [](const std::vector<std::size_t>& v) {
      std::string out;
      for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
      return out;
    };
    std::cout << "A ranks  " << list(r.a_ranks) << "  (bound " << r.a_bound << ")\n"
              << "B ranks  " << list(r.b_ranks) << "  (bound " << r.b_bound << ")\n"
              << "max residual " << r.max_residual << ", min eigenvalue " << r.min_eigenvalue << "\n";
  }
  return r.within_bounds ? kOk : kVerifyFailed;
}

int cmd_gen_sn(std::size_t n) {
  if (n == 0) throw UsageError("gen sn: N must be positive");
  const ExactMatrix s = generate_sn(n);
  if (g.json) {
    emit(json_io::matrix_to_json(s));
  } else {
    write_matrix(std::cout, s);
  }
  return kOk;
}

int cmd_gen_cutpoly(std::size_t n) {
  if (n < 2 || n > kMaxCutPolyN) throw UsageError("gen cutpoly: N must be in 2.." + std::to_string(kMaxCutPolyN));
  if (g.json) {
    emit(json_io::matrix_to_json(slack_matrix_cut_clique(n)));
    return kOk;
  }
  const std::size_t rows = (std::size_t{1} << n) - n - 1;
  const std::size_t cols = std::size_t{1} << (n - 1);
  write_matrix_header(std::cout, rows, cols);
  for_each_slack_row(n, [](const std::vector<Rational>& row) { write_matrix_row(std::cout, row); });
  return kOk;
}

int cmd_gen_graph_g(std::size_t n) {
  if (n < 2 || n > kMaxCutPolyN) throw UsageError("gen graph-g: N must be in 2.." + std::to_string(kMaxCutPolyN));
  write_graph(std::cout, graph_G(n));
  return kOk;
}

int cmd_gen_disjointness(std::size_t n, std::size_t l, bool forbidden) {
  const DisjointnessGraphs d = graph_H(n, l);
  write_graph(std::cout, forbidden ? d.Hbar : d.H);
  return kOk;
}

int cmd_appendix(std::size_t n, std::size_t cap) {
  const AppendixCheck r = appendix_reduction_check(n, cap, threads());
  if (g.json) {
    json j = json_io::appendix_check_to_json(r);
    j["command"] = "appendix-check";
    emit(j);
  } else {
    std::cout << (r.passed ? "pass" : "FAIL") << ": " << r.pairs_checked << " pairs, " << r.failures
              << " failures (N=" << r.N << ", l=" << r.l << ", |U|=" << r.clique_size << ")\n";
  }
  return r.passed ? kOk : kVerifyFailed;
}

int cmd_feasible_cover(const std::string& ones_path, const std::string& forbidden_path, std::uint64_t budget) {
  const BipartiteGraph ones = load_graph(ones_path);
  const BipartiteGraph forbidden = load_graph(forbidden_path);
  const CoverResult r = feasible_biclique_cover(ones, forbidden, budget);
  if (g.json) {
    json j = json_io::cover_to_json(r);
    j["command"] = "feasible-cover";
    emit(j);
  } else {
    std::cout << cover_text(r) << "\n";
  }
  return r.exact ? kOk : kExhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lower bounds on positive semidefinite rank from zero patterns"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Machine-readable output (schema 1)");
  app.add_option("--threads", g.threads, "Worker threads (default: $PSDRANK_THREADS or 1)")->check(CLI::PositiveNumber);

  std::string input;
  std::string input2;
  std::string matrix_path;
  std::uint64_t budget = kDefaultCoverBudget;
  std::uint64_t seed = 1;
  int tries = 5;
  std::string rows;
  std::string cols;
  bool no_sign_fix = false;
  std::size_t cap = 24;
  std::size_t sqrt_cap = 16;
  double tol = 1e-9;
  std::size_t n = 0;
  std::size_t l = 0;
  bool forbidden = false;
  std::size_t appendix_cap = kDefaultAppendixCap;

  std::function<int()> run;
  auto input_opt = [&](CLI::App* c, const char* what = "Input file (default: stdin)") {
    c->add_option("input", input, what);
  };

  auto* rank_cmd = app.add_subcommand("rank", "Exact rank over Q");
  input_opt(rank_cmd);
  rank_cmd->callback([&] { run = [&] { return cmd_rank(input); }; });

  auto* tri_cmd = app.add_subcommand("trirank", "Triangular rank of the support");
  input_opt(tri_cmd);
  tri_cmd->callback([&] { run = [&] { return cmd_trirank(input); }; });

  auto* bool_cmd = app.add_subcommand("boolrank", "Boolean rank of the support");
  input_opt(bool_cmd);
  bool_cmd->add_option("--budget", budget, "Search node budget");
  bool_cmd->callback([&] { run = [&] { return cmd_boolrank(input, budget); }; });

  auto* bounds_cmd = app.add_subcommand("bounds", "All bounds for one matrix");
  input_opt(bounds_cmd);
  bounds_cmd->add_option("--budget", budget, "Boolean rank search node budget");
  bounds_cmd->add_option("--sqrt-cap", sqrt_cap, "Largest sign enumeration (nonzeros) for the order-3 test");
  bounds_cmd->callback([&] { run = [&] { return cmd_bounds(input, budget, sqrt_cap); }; });

  auto* embed_cmd = app.add_subcommand("embed", "Subspace embeddings");
  embed_cmd->require_subcommand(1);
  auto* from_rank = embed_cmd->add_subcommand("from-rank", "Embedding from the rows of a matrix");
  input_opt(from_rank);
  from_rank->callback([&] { run = [&] { return cmd_embed_from_rank(input); }; });
  auto* from_psd = embed_cmd->add_subcommand("from-psd", "Embedding img A_k, ker B_l of a factorization");
  input_opt(from_psd);
  from_psd->callback([&] { run = [&] { return cmd_embed_from_psd(input); }; });

  auto* psd_cmd = app.add_subcommand("psd", "Psd factorizations");
  psd_cmd->require_subcommand(1);
  auto* from_emb = psd_cmd->add_subcommand("from-embedding", "Projection factorization of an embedding");
  input_opt(from_emb);
  from_emb->callback([&] { run = [&] { return cmd_psd_from_embedding(input); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check a factorization or an embedding");
  verify_cmd->require_subcommand(1);
  auto* verify_psd = verify_cmd->add_subcommand("psd", "Check psd factors and tr(A_k B_l) = S(k,l)");
  input_opt(verify_psd, "Factorization JSON (default: stdin)");
  verify_psd->add_option("--matrix", matrix_path, "Target matrix (default: the \"T\" field)");
  verify_psd->callback([&] { run = [&] { return cmd_verify_psd(input, matrix_path); }; });
  auto* verify_emb = verify_cmd->add_subcommand("embedding", "Check U_k in V_l exactly at the zeros");
  input_opt(verify_emb, "Embedding JSON (default: stdin)");
  verify_emb->add_option("--matrix", matrix_path, "Matrix or 0/1 pattern")->required();
  verify_emb->callback([&] { run = [&] { return cmd_verify_embedding(input, matrix_path); }; });

  auto* realize_cmd = app.add_subcommand("realize-support", "Matrix of rank <= q with the factorization's support");
  input_opt(realize_cmd, "Factorization JSON (default: stdin)");
  realize_cmd->add_option("--seed", seed, "Random seed");
  realize_cmd->add_option("--tries", tries, "Maximum samples");
  realize_cmd->callback([&] { run = [&] { return cmd_realize(input, seed, tries); }; });

  auto* sqrt_cmd = app.add_subcommand("sqrt-bound", "Minimum rank over signed square roots of a submatrix");
  input_opt(sqrt_cmd);
  sqrt_cmd->add_option("--rows", rows, "1-based rows, e.g. 3-6 or 3,4,5,6")->required();
  sqrt_cmd->add_option("--cols", cols, "1-based columns")->required();
  sqrt_cmd->add_flag("--no-sign-fix", no_sign_fix, "Enumerate all 2^z sign choices");
  sqrt_cmd->add_option("--cap", cap, "Largest number of nonzeros to enumerate");
  sqrt_cmd->callback([&] { run = [&] { return cmd_sqrt_bound(input, rows, cols, no_sign_fix, cap); }; });

  auto* order3_cmd = app.add_subcommand("order3-exclude", "Try to certify psd rank >= 4");
  input_opt(order3_cmd);
  order3_cmd->add_option("--rows", rows, "Restrict to these 1-based rows");
  order3_cmd->add_option("--cols", cols, "Restrict to these 1-based columns");
  order3_cmd->add_flag("--no-sign-fix", no_sign_fix, "Enumerate all 2^z sign choices");
  order3_cmd->add_option("--cap", cap, "Largest number of nonzeros to enumerate");
  order3_cmd->callback([&] { run = [&] { return cmd_order3(input, rows, cols, no_sign_fix, cap); }; });

  auto* reduce_cmd = app.add_subcommand("reduce-rank", "Lower the factor ranks of a float factorization");
  input_opt(reduce_cmd, "Factorization JSON, rational strings or numbers (default: stdin)");
  reduce_cmd->add_option("--tol", tol, "Relative eigenvalue threshold for numerical rank");
  reduce_cmd->callback([&] { run = [&] { return cmd_reduce_rank(input, tol); }; });

  auto* gen_cmd = app.add_subcommand("gen", "Generators");
  gen_cmd->require_subcommand(1);
  auto* gen_sn = gen_cmd->add_subcommand("sn", "S_n(i,j) = (i-j-1)(i-j-2)/2");
  gen_sn->add_option("N", n)->required();
  gen_sn->callback([&] { run = [&] { return cmd_gen_sn(n); }; });
  auto* gen_cut = gen_cmd->add_subcommand("cutpoly", "Clique/cut slack matrix of K_N");
  gen_cut->add_option("N", n)->required();
  gen_cut->callback([&] { run = [&] { return cmd_gen_cutpoly(n); }; });
  auto* gen_g = gen_cmd->add_subcommand("graph-g", "Clique/cut graph G of K_N");
  gen_g->add_option("N", n)->required();
  gen_g->callback([&] { run = [&] { return cmd_gen_graph_g(n); }; });
  auto* gen_disj = gen_cmd->add_subcommand("disjointness", "Disjointness graph H_N on L-subsets");
  gen_disj->add_option("N", n)->required();
  gen_disj->add_option("L", l)->required();
  gen_disj->add_flag("--forbidden", forbidden, "Emit the |x & y| = 1 graph instead");
  gen_disj->callback([&] { run = [&] { return cmd_gen_disjointness(n, l, forbidden); }; });

  auto* appendix_cmd = app.add_subcommand("appendix-check", "Check the clique/cut to disjointness reduction");
  appendix_cmd->add_option("N", n)->required();
  appendix_cmd->add_option("--cap", appendix_cap, "Largest N accepted");
  appendix_cmd->callback([&] { run = [&] { return cmd_appendix(n, appendix_cap); }; });

  auto* feasible_cmd = app.add_subcommand("feasible-cover", "Fewest bicliques covering ONES avoiding FORBIDDEN");
  feasible_cmd->add_option("ones", input, "Graph file")->required();
  feasible_cmd->add_option("forbidden", input2, "Graph file")->required();
  feasible_cmd->add_option("--budget", budget, "Search node budget");
  feasible_cmd->callback([&] { run = [&] { return cmd_feasible_cover(input, input2, budget); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "psdrank: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "psdrank: " << e.what() << "\n";
    return kExhausted;
  } catch (const json::exception& e) {
    std::cerr << "psdrank: bad JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "psdrank: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "psdrank: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
