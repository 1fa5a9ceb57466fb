#include "uberdh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uberdh/domination.hpp"
#include "uberdh/double_homology.hpp"
#include "uberdh/io.hpp"
#include "uberdh/mvss.hpp"
#include "uberdh/parallel.hpp"
#include "uberdh/random.hpp"
#include "uberdh/uber.hpp"
#include "uberdh/verify.hpp"

namespace uberdh {

namespace {

struct RunConfig {
  std::string coeffs_text = "q";
  Coefficients coeffs = Coefficients::rationals();
  unsigned threads = 0;
  int max_vertices = 20;
  std::string cache_dir;
  std::string format = "json";
  std::optional<int> vertices;
  std::string input = "-";
};

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return read_all(f);
}

class Runner {
 public:
  Runner(RunConfig cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(std::move(cfg)), in_(in), out_(out), err_(err) {}

  bool json() const { return cfg_.format == "json"; }

  SimplicialComplex complex() {
    const std::string text = cfg_.input == "-" ? read_all(in_) : read_file(cfg_.input);
    SimplicialComplex k = parse_complex(text, cfg_.vertices);
    if (k.vertex_count() > cfg_.max_vertices) throw SizeCap(k.vertex_count(), cfg_.max_vertices);
    return k;
  }

  void emit(const std::string& command, Json body, bool with_ring = true) {
    Json doc{{"schema", kSchemaVersion}, {"command", command}};
    if (with_ring) doc["coefficients"] = cfg_.coeffs.name();
    doc.update(body);
    out_ << doc.dump(2) << "\n";
  }

  TableOptions table_options(bool bases) const {
    TableOptions t;
    t.max_vertices = cfg_.max_vertices;
    t.keep_bases = bases;
    return t;
  }

  // Builds the table and keeps the on-disk cache in sync with it.
  template <class Scalar>
  SubsetHomologyTable<Scalar> table(const SimplicialComplex& k, bool reduced, const Ring<Scalar>& ring, bool bases) {
    SubsetHomologyTable<Scalar> t(k, reduced, ring, table_options(bases));
    if (!cfg_.cache_dir.empty()) {
      const std::string path = cache_file(cfg_.cache_dir, k, cfg_.coeffs, reduced);
      const auto groups = t.groups();
      const auto cached = load_cache(path, k, cfg_.coeffs, reduced);
      if (cached && *cached != groups) err_ << "warning: cache " << path << " disagrees with recomputation; rewriting\n";
      if (!cached || *cached != groups) {
        std::filesystem::create_directories(cfg_.cache_dir);
        save_cache(path, k, cfg_.coeffs, reduced, groups);
      }
    }
    return t;
  }

  // Groups only: served from the cache when possible.
  template <class Scalar>
  SubsetGroups groups(const SimplicialComplex& k, bool reduced, const Ring<Scalar>& ring) {
    if (!cfg_.cache_dir.empty()) {
      if (auto cached = load_cache(cache_file(cfg_.cache_dir, k, cfg_.coeffs, reduced), k, cfg_.coeffs, reduced))
        return *cached;
    }
    return table(k, reduced, ring, false).groups();
  }

  int homology(bool reduced, bool subsets) {
    const auto k = complex();
    return visit_ring(cfg_.coeffs, [&](auto ring) {
      if (subsets) {
        const auto g = groups(k, reduced, ring);
        if (json()) emit("homology", Json{{"reduced", reduced}, {"subsets", subsets_json(g)}});
        else out_ << subsets_text(g);
      } else {
        const auto g = uberdh::homology(k, reduced, ring);
        if (json()) emit("homology", Json{{"reduced", reduced}, {"groups", graded_json(g)}});
        else out_ << graded_text(g);
      }
      return kExitOk;
    });
  }

  int uber(bool zero_degree) {
    const auto k = complex();
    if (!is_connected(k)) err_ << "warning: the complex is disconnected; the comparison results assume connected input\n";
    return visit_ring(cfg_.coeffs, [&](auto ring) {
      if (zero_degree) {
        const auto b = uber_zero_degree(table(k, false, ring, true));
        if (json()) emit("uber", Json{{"zero_degree", true}, {"groups", zero_degree_json(b)}});
        else out_ << zero_degree_text(b);
      } else {
        UberOptions opt;
        opt.max_vertices = cfg_.max_vertices;
        const auto h = uberhomology(k, ring, opt);
        if (json()) emit("uber", Json{{"zero_degree", false}, {"groups", uber_json(h)}});
        else out_ << uber_text(h);
      }
      return kExitOk;
    });
  }

  int double_homology() {
    const auto k = complex();
    return visit_ring(cfg_.coeffs, [&](auto ring) {
      const auto dh = uberdh::double_homology(table(k, true, ring, true));
      if (json()) emit("double", Json{{"groups", double_json(dh)}});
      else out_ << double_text(dh);
      return kExitOk;
    });
  }

  int mvss(const std::string& variant, int page) {
    const auto k = complex();
    const bool reduced = variant == "reduced";
    return visit_ring(cfg_.coeffs, [&](auto ring) {
      BigradedTable entries;
      if (page == 1) {
        entries = e1_entries(groups(k, reduced, ring), k.vertex_count(), cfg_.coeffs);
      } else {
        entries = e2_page(table(k, reduced, ring, true)).entries;
      }
      if (json()) emit("mvss", page_json(variant, page, entries));
      else out_ << page_text(variant, page, entries);
      return kExitOk;
    });
  }

  int domination(std::optional<long long> x) {
    const auto k = complex();
    const auto p = domination_polynomial(one_skeleton(k));
    if (json()) {
      Json body = polynomial_json(p);
      if (x) body["evaluation"] = Json{{"x", *x}, {"value", p.evaluate(*x)}};
      emit("domination", body, false);
    } else if (x) {
      out_ << p.evaluate(*x) << "\n";
    } else {
      out_ << p.to_string() << "\n";
    }
    return kExitOk;
  }

  int verify(bool all) {
    const auto k = complex();
    VerifyOptions opt;
    opt.max_vertices = cfg_.max_vertices;
    opt.all = all;
    const auto report = verify_all(k, cfg_.coeffs, opt);
    if (json()) emit("verify", report_json(report));
    else out_ << report_text(report);
    return report.failures() == 0 ? kExitOk : kExitVerification;
  }

  int generate(const std::string& shape, std::optional<int> n, const std::string& edges, std::uint64_t seed) {
    auto need_n = [&]() {
      if (!n) throw InputError("--n is required for shape " + shape);
      return *n;
    };
    SimplicialComplex k;
    if (shape == "simplex") {
      if (need_n() < 1) throw InputError("a simplex needs at least one vertex");
      k = simplex(*n);
    } else if (shape == "boundary-simplex") {
      k = boundary_simplex(need_n());
    } else if (shape == "cycle") {
      k = cycle(need_n());
    } else if (shape == "icosahedron") {
      k = icosahedron();
    } else if (shape == "flag") {
      if (edges.empty()) throw InputError("--edges FILE is required for shape flag");
      const Graph g = parse_graph(edges == "-" ? read_all(in_) : read_file(edges));
      k = flag_complex(g);
      if (k.is_empty()) throw InputError("the graph has no vertices");
    } else if (shape == "random") {
      Rng rng(seed);
      k = random_connected_nonsimplex(need_n(), rng);
    } else {
      throw InputError("unknown shape '" + shape + "'");
    }
    if (json()) {
      Json doc{{"schema", kSchemaVersion}};
      doc.update(complex_json(k));
      out_ << doc.dump() << "\n";
    } else {
      for (VertexSet f : k.facets()) {
        const auto vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) out_ << (i ? " " : "") << vs[i];
        out_ << "\n";
      }
    }
    return kExitOk;
  }

 private:
  RunConfig cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact uberhomology, double homology and Mayer-Vietoris pages of simplicial complexes", "uberdh"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* dir = std::getenv("UBERDH_CACHE")) cfg.cache_dir = dir;
  std::optional<int> vertices;
  app.add_option("--coeffs", cfg.coeffs_text, "z, q, f2 or fp:<prime>")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--max-vertices", cfg.max_vertices, "refuse complexes with more vertices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cache", cfg.cache_dir, "directory for the subset homology cache");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--vertices", vertices, "vertex count for text input")->check(CLI::PositiveNumber);

  auto input_option = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "complex file, - for stdin"); };

  std::string shape;
  std::optional<int> n;
  std::string edges;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("generate", "print a standard complex");
  gen->add_option("--shape", shape, "simplex, boundary-simplex, cycle, icosahedron, flag or random")
      ->required()
      ->check(CLI::IsMember({"simplex", "boundary-simplex", "cycle", "icosahedron", "flag", "random"}));
  gen->add_option("--n", n, "number of vertices");
  gen->add_option("--edges", edges, "edge list for the flag complex");
  gen->add_option("--seed", seed, "seed for the random shape");

  bool reduced = false, subsets = false;
  auto* hom = app.add_subcommand("homology", "simplicial homology");
  hom->add_flag("--reduced", reduced, "reduced homology");
  hom->add_flag("--subsets", subsets, "homology of every induced subcomplex");
  input_option(hom);

  bool zero_degree = false;
  auto* ub = app.add_subcommand("uber", "uberhomology");
  ub->add_flag("--zero-degree", zero_degree, "only the weight-0 part");
  input_option(ub);

  auto* dbl = app.add_subcommand("double", "double homology of the moment-angle complex");
  input_option(dbl);

  std::string variant = "reduced";
  int page = 2;
  auto* mv = app.add_subcommand("mvss", "anti-star Mayer-Vietoris spectral sequence");
  mv->add_option("--variant", variant)->check(CLI::IsMember({"reduced", "unreduced"}))->capture_default_str();
  mv->add_option("--page", page)->check(CLI::IsMember({1, 2}))->capture_default_str();
  input_option(mv);

  std::optional<long long> eval;
  auto* dom = app.add_subcommand("domination", "connected domination polynomial of the 1-skeleton");
  dom->add_option("--eval", eval, "evaluate at an integer");
  input_option(dom);

  bool all = false;
  auto* ver = app.add_subcommand("verify", "check the comparison statements on the input");
  ver->add_flag("--all", all, "also compare with full uberhomology");
  input_option(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    cfg.coeffs = Coefficients::parse(cfg.coeffs_text);
    cfg.vertices = vertices;
    if (app.count("--threads")) set_thread_count(cfg.threads);
    Runner run(cfg, in, out, err);
    if (*gen) return run.generate(shape, n, edges, seed);
    if (*hom) return run.homology(reduced, subsets);
    if (*ub) return run.uber(zero_degree);
    if (*dbl) return run.double_homology();
    if (*mv) return run.mvss(variant, page);
    if (*dom) return run.domination(eval);
    if (*ver) return run.verify(all);
  } catch (const TorsionObstruction& e) {
    err << "error: " << e.what() << "\n";
    return kExitTorsion;
  } catch (const SizeCap& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IsSimplex& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Disconnected& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace uberdh
