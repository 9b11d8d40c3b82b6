#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spreadhom/field.hpp"
#include "spreadhom/functors.hpp"
#include "spreadhom/json_io.hpp"
#include "spreadhom/rha.hpp"
#include "spreadhom/spreadcalc.hpp"

namespace sh = spreadhom;
using sh::io::json;

namespace {

json points_json(const sh::Poset& p, const std::vector<int>& ids) {
  json a = json::array();
  for (int v : ids) a.push_back(sh::io::point_json(p.coords(v)));
  return a;
}

void emit(const json& j) { std::cout << sh::io::dump(j); }

struct Options {
  unsigned prime = 0;
  std::string spread1, spread2;
  std::string module_path, poset_path, grid_path, grids_path;
  std::vector<std::string> test_modules;
  std::string family = "spreads";
  std::string which, op;
  int max_len = -1;
  int n = 3, r = 0, s = 1, t = 0;

  void apply_prime() const {
    if (prime) sh::Fp::set_modulus(prime);
  }
};

void run_hom(const Options& o) {
  json sj = sh::io::read_json_file(o.spread1);
  json tj = sh::io::read_json_file(o.spread2);
  if (!sj.contains("poset") || !tj.contains("poset"))
    throw std::invalid_argument("spread files need a \"poset\"");
  auto p = sh::io::parse_poset(sj["poset"]);
  auto p2 = sh::io::parse_poset(tj["poset"]);
  if (p->sizes() != p2->sizes())
    throw std::invalid_argument("spreads live over different grids");
  std::vector<int> s = sh::io::parse_spread_support(*p, sj);
  std::vector<int> t = sh::io::parse_spread_support(*p, tj);
  sh::HomSpreads h = sh::hom_dim_spreads(*p, s, t);
  json out;
  out["dim"] = h.dim;
  out["witnesses"] = json::array();
  for (const auto& u : h.images) out["witnesses"].push_back(points_json(*p, u));
  emit(out);
}

void run_resolve(const Options& o) {
  sh::PersModule m = sh::io::parse_module(sh::io::read_json_file(o.module_path));
  sh::FamilyKind kind = sh::family_kind_from_string(o.family);
  sh::Family fam = sh::family_with_projectives(m.poset_ptr(), kind);
  sh::FamilyHom fh(fam);
  sh::Resolution res = sh::minimal_resolution(m, fh, o.max_len);
  if (!res.complete) throw sh::Truncated("resolution exceeds the length cap");
  const sh::Poset& p = m.poset();
  json out;
  out["poset"] = sh::io::poset_json(p);
  out["family"] = sh::to_string(kind);
  out["prime"] = sh::Fp::modulus();
  json steps = json::array();
  for (const auto& st : res.steps) {
    json step = json::array();
    for (std::size_t i = 0; i < fam.supports.size(); ++i)
      if (st.mult[i] > 0) {
        json e;
        e["spread"] = sh::io::spread_json(p, fam.supports[i]);
        e["mult"] = st.mult[i];
        step.push_back(e);
      }
    steps.push_back(step);
  }
  out["resolution"] = json{{"length", res.length()}, {"steps", steps}};
  std::vector<long> net(fam.supports.size(), 0);
  for (std::size_t k = 0; k < res.steps.size(); ++k)
    for (std::size_t i = 0; i < net.size(); ++i)
      net[i] += (k % 2 == 0 ? 1 : -1) * static_cast<long>(res.steps[k].mult[i]);
  json gc = json::array(), plus = json::array(), minus = json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i] == 0) continue;
    json e;
    e["spread"] = sh::io::spread_json(p, fam.supports[i]);
    e["coef"] = net[i];
    gc.push_back(e);
    e["coef"] = std::abs(net[i]);
    (net[i] > 0 ? plus : minus).push_back(e);
  }
  out["groth_class"] = gc;
  out["signed_decomposition"] = json{{"plus", plus}, {"minus", minus}};
  out["x_dimension"] = res.length();
  emit(out);
}

void run_invariant(const Options& o) {
  sh::PersModule m = sh::io::parse_module(sh::io::read_json_file(o.module_path));
  const sh::Poset& p = m.poset();
  json out;
  if (o.which == "dim") {
    out["dims"] = json::array();
    for (sh::Index d : m.dims()) out["dims"].push_back(d);
  } else if (o.which == "rank") {
    out["entries"] = json::array();
    for (const auto& e : sh::rank_invariant(m)) {
      json r;
      r["from"] = sh::io::point_json(p.coords(e.x));
      r["to"] = sh::io::point_json(p.coords(e.y));
      r["rank"] = e.rank;
      out["entries"].push_back(r);
    }
  } else if (o.which == "barcode") {
    out["bars"] = json::array();
    for (const auto& b : sh::barcode_1d(m)) {
      json r;
      r["birth"] = sh::io::point_json(p.coords(b.birth));
      if (b.death)
        r["death"] = sh::io::point_json(p.coords(*b.death));
      else
        r["death"] = nullptr;
      r["mult"] = b.mult;
      out["bars"].push_back(r);
    }
  } else if (o.which == "dimhom") {
    sh::FamilyKind kind = sh::family_kind_from_string(o.family);
    sh::Family fam = sh::enumerate_family(m.poset_ptr(), kind);
    out["family"] = sh::to_string(kind);
    out["entries"] = json::array();
    for (const auto& s : fam.supports) {
      json e;
      e["spread"] = sh::io::spread_json(p, s);
      e["dim"] = sh::hom_dim(sh::spread_module(m.poset_ptr(), s), m);
      out["entries"].push_back(e);
    }
  } else {
    throw std::invalid_argument("unknown invariant: " + o.which);
  }
  emit(out);
}

void run_quiver(const Options& o) {
  auto p = sh::io::parse_poset(sh::io::read_json_file(o.poset_path));
  sh::FamilyKind kind = sh::family_kind_from_string(o.family);
  sh::Family fam = sh::enumerate_family(p, kind);
  sh::QuiverReport rep = sh::end_quiver(fam);
  std::cout << "digraph quiver {\n";
  for (std::size_t i = 0; i < fam.supports.size(); ++i)
    std::cout << "  v" << i << " [label=\"" << sh::spread_label(*p, fam.supports[i]) << "\"];\n";
  for (const auto& a : rep.arrows)
    std::cout << "  v" << a.src << " -> v" << a.tgt << " [label=\"" << a.multiplicity << "\"];\n";
  std::cout << "}\n";
}

void run_koszul(const Options& o) {
  sh::KoszulComplex kc = sh::koszul_complex(o.n);
  const sh::Poset& p = *kc.poset;
  json out;
  out["n"] = o.n;
  out["poset"] = sh::io::poset_json(p);
  out["staircase"] = sh::io::spread_json(p, kc.staircase);
  out["terms"] = json::array();
  for (const auto& deg : kc.summand_supports) {
    json t;
    t["summands"] = json::array();
    for (const auto& s : deg) t["summands"].push_back(sh::io::spread_json(p, s));
    out["terms"].push_back(t);
  }
  out["diffs"] = json::array();
  for (const auto& d : kc.complex.diffs) {
    json entries = json::array();
    for (int x = 0; x < p.size(); ++x) {
      const sh::Mat& mat = d.at(x);
      if (mat.size() == 0 || sh::is_zero_mat(mat)) continue;
      json e;
      e["at"] = sh::io::point_json(p.coords(x));
      e["mat"] = sh::io::matrix_json(mat);
      entries.push_back(e);
    }
    out["diffs"].push_back(json{{"entries", entries}});
  }
  emit(out);
}

void run_functor(const Options& o) {
  json gj = sh::io::read_json_file(o.grid_path);
  sh::AlignedSubgrid q = sh::io::parse_subgrid(gj);
  sh::PersModule m = sh::io::parse_module(sh::io::read_json_file(o.module_path));
  if (o.op == "restrict" || o.op == "contract") {
    const auto& sizes = m.poset().sizes();
    if (q.dim() != static_cast<int>(sizes.size()))
      throw std::invalid_argument("subgrid arity does not match the grid");
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (q.axes()[i].back() >= sizes[i]) throw std::invalid_argument("subgrid leaves the grid");
    emit(sh::io::module_json(o.op == "restrict" ? sh::restrict_module(m, q)
                                                : sh::contract_module(m, q)));
  } else if (o.op == "extend") {
    std::vector<int> tsz;
    if (gj.contains("target_sizes")) {
      for (const auto& v : gj["target_sizes"]) tsz.push_back(v.get<int>());
    } else {
      for (const auto& ax : q.axes()) tsz.push_back(ax.back() + 1);
    }
    emit(sh::io::module_json(sh::extend_module(m, q, sh::AlignedSubgrid::full(tsz))));
  } else {
    throw std::invalid_argument("unknown functor op: " + o.op);
  }
}

void run_check_family(const Options& o) {
  json gj = sh::io::read_json_file(o.grids_path);
  if (!gj.contains("poset") || !gj.contains("grids"))
    throw std::invalid_argument("grids file needs \"poset\" and \"grids\"");
  auto bound = sh::io::parse_poset(gj["poset"]);
  std::vector<sh::AlignedSubgrid> grids;
  for (const auto& g : gj["grids"]) grids.push_back(sh::io::parse_subgrid(g));
  sh::FamilyKind kind = sh::family_kind_from_string(o.family);
  std::vector<sh::PersModule> mods;
  for (const auto& path : o.test_modules)
    mods.push_back(sh::io::parse_module(sh::io::read_json_file(path)));
  sh::ClassCheckReport rep = sh::check_extended_class(bound, grids, kind, mods);
  json out;
  out["family"] = sh::to_string(kind);
  out["grids_checked"] = rep.grids_checked;
  out["pass"] = rep.pass();
  if (rep.violation) {
    json v;
    v["condition"] = rep.violation->condition;
    v["grid"] = rep.violation->grid;
    v["detail"] = rep.violation->detail;
    v["member_support"] = points_json(*bound, rep.violation->member_support);
    if (rep.violation->class_point)
      v["class_point"] = sh::io::point_json(*rep.violation->class_point);
    else
      v["class_point"] = nullptr;
    out["violation"] = v;
  } else {
    out["violation"] = nullptr;
  }
  emit(out);
}

void run_probe(const Options& o) {
  auto p = sh::io::parse_poset(sh::io::read_json_file(o.poset_path));
  sh::PrecoverProbe probe = sh::upset_precover_probe(p, o.r, o.s, o.t);
  json out;
  out["candidates"] = json::array();
  for (const auto& c : probe.candidates) out["candidates"].push_back(sh::io::spread_json(*p, c));
  out["chain"] = probe.chain;
  out["chain_steps"] = probe.chain_steps;
  out["chain_verified"] = probe.chain_verified;
  out["clipped"] = probe.clipped;
  out["genuine_precover"] = probe.genuine_precover;
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  auto fail = [](const std::string& type, const std::string& msg, int code) {
    json err;
    err["error"] = json{{"type", type}, {"message", msg}};
    emit(err);
    return code;
  };

  try {
    sh::Fp::set_modulus_from_env();
  } catch (const std::exception& e) {
    return fail("validation", e.what(), 2);
  }

  Options o;
  CLI::App app{"homological invariants of spread modules over grid posets"};
  app.require_subcommand(1);
  app.add_option("--prime", o.prime, "field modulus, overrides SPREADHOM_PRIME");
  bool json_errors = true;
  app.add_flag("--json-errors", json_errors, "emit errors as JSON (always on)");

  auto with_cb = [&](CLI::App* sub, void (*fn)(const Options&)) {
    sub->fallthrough();
    sub->callback([&o, fn] {
      o.apply_prime();
      fn(o);
    });
    return sub;
  };

  auto* hom = with_cb(app.add_subcommand("hom", "dimension and witnesses of Hom(I_S, I_T)"),
                      run_hom);
  hom->add_option("--spread1", o.spread1, "source spread file")->required();
  hom->add_option("--spread2", o.spread2, "target spread file")->required();

  auto* resolve =
      with_cb(app.add_subcommand("resolve", "minimal resolution relative to a family"),
              run_resolve);
  resolve->add_option("--family", o.family, "family kind")->required();
  resolve->add_option("--module", o.module_path, "module file")->required();
  resolve->add_option("--max-len", o.max_len, "length cap, default 2|P|");

  auto* inv = with_cb(app.add_subcommand("invariant", "module invariants"), run_invariant);
  inv->add_option("--which", o.which, "dim, rank, barcode, or dimhom")->required();
  inv->add_option("--module", o.module_path, "module file")->required();
  inv->add_option("--family", o.family, "family kind for dimhom");

  auto* quiver =
      with_cb(app.add_subcommand("quiver", "irreducible morphism quiver as DOT"), run_quiver);
  quiver->add_option("--family", o.family, "family kind")->required();
  quiver->add_option("--poset", o.poset_path, "grid poset file")->required();

  auto* koszul = with_cb(app.add_subcommand("koszul", "staircase Koszul complex"), run_koszul);
  koszul->add_option("--n", o.n, "grid side length")->required();

  auto* functor =
      with_cb(app.add_subcommand("functor", "restriction, extension, contraction"), run_functor);
  functor->add_option("--op", o.op, "restrict, extend, or contract")->required();
  functor->add_option("--grid", o.grid_path, "aligned subgrid file")->required();
  functor->add_option("--module", o.module_path, "module file")->required();

  auto* check =
      with_cb(app.add_subcommand("check-family", "extended class conditions over a covering"),
              run_check_family);
  check->add_option("--grids", o.grids_path, "bound poset and grid covering file")->required();
  check->add_option("--family", o.family, "family kind")->required();
  check->add_option("--module", o.test_modules, "test module files for the presentation condition");

  auto* probe =
      with_cb(app.add_subcommand("probe-precover", "upset approximations of a clipped hook"),
              run_probe);
  probe->add_option("--poset", o.poset_path, "two dimensional grid file")->required();
  probe->add_option("--r", o.r, "hook source column")->required();
  probe->add_option("--s", o.s, "hook target column")->required();
  probe->add_option("--t", o.t, "hook row")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("validation", e.what(), 2);
  } catch (const sh::Truncated& e) {
    return fail("truncated", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("validation", e.what(), 2);
  }
  return 0;
}
