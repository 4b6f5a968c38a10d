#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <rectihull/rectihull.hpp>

using namespace rectihull;
using json = nlohmann::json;

namespace {

struct Common {
  std::string input = "-";
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 1;
  double perturb = 0.0;
  bool json_flag = false;

  std::string fmt() const { return json_flag ? "json" : format; }
};

void add_common(CLI::App* cmd, Common& c, bool takes_input, std::vector<std::string> formats) {
  if (takes_input) cmd->add_option("input", c.input, "point file, '-' for stdin");
  cmd->add_option("--out", c.out, "write the result here instead of stdout");
  cmd->add_option("--format", c.format)->check(CLI::IsMember(formats));
  cmd->add_flag("--json", c.json_flag, "same as --format json");
  cmd->add_option("--seed", c.seed);
  cmd->add_option("--perturb", c.perturb, "jitter coordinates by up to EPS before computing")
      ->check(CLI::PositiveNumber);
}

PointSet load(const Common& c) {
  PointSet P;
  if (c.input == "-") {
    P = read_points(std::cin);
  } else {
    std::ifstream in(c.input);
    if (!in) throw std::runtime_error("cannot open " + c.input);
    P = read_points(in);
  }
  if (c.perturb > 0.0) return perturb(P, c.seed, c.perturb);
  require_general_position(P);
  return P;
}

template <class F>
void emit(const Common& c, F&& write) {
  if (c.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream os(c.out);
  if (!os) throw std::runtime_error("cannot write " + c.out);
  write(os);
}

void print_ids(std::ostream& os, const std::vector<PointId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
  os << '\n';
}

std::string arc_text(const IntervalSet& s) {
  std::ostringstream os;
  os.precision(12);
  for (const auto& a : s.intervals()) os << " [" << a.lo << ", " << a.hi << "]";
  return s.empty() ? " -" : os.str();
}

void print_regions(std::ostream& os, const RegionSet& rs) {
  os.precision(10);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    os << "region " << i << " area " << rs[i].area() << " x [" << rs[i].x_min() << ", " << rs[i].x_max() << "]\n";
    for (const auto& v : rs[i].boundary()) os << "  " << v.x << ' ' << v.y << '\n';
  }
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("RECTIHULL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min(count, thread_budget());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto run = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// --- gen ---------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::size_t n = 100;
  std::vector<double> extent{1.0, 1.0, 1.0};
  double eps = 1e-3;
  CylinderParams cyl;
  bool report_window = false;
};

int run_gen(const Common& c, const GenOptions& g) {
  PointSet P;
  std::optional<AngleInterval> window;
  if (g.family == "uniform-box") {
    if (g.extent.size() != 3) throw std::invalid_argument("--extent takes three values");
    P = uniform_box(g.n, c.seed, {g.extent[0], g.extent[1], g.extent[2]});
  } else if (g.family == "sphere-surface") {
    P = sphere_surface(g.n, c.seed);
  } else if (g.family == "grid-perturbed") {
    P = grid_perturbed(g.n, c.seed, g.eps);
  } else if (g.family == "torus-cubes") {
    P = torus_cubes(c.seed, g.eps);
  } else if (g.family == "box-corners") {
    P = box_corners(c.seed, g.eps);
  } else if (g.family == "two-points") {
    P = two_points();
  } else {
    auto inst = cylinder_geodesic(g.n, c.seed, g.cyl);
    P = std::move(inst.points);
    window = inst.window;
  }
  if (g.report_window) {
    if (!window) throw std::invalid_argument("--report-window only applies to cylinder-geodesic");
    std::cerr.precision(17);
    std::cerr << "window " << window->lo << ' ' << window->hi << '\n';
  }
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      os << points_json(P).dump() << '\n';
      return;
    }
    if (window) {
      os.precision(17);
      os << "# window " << window->lo << ' ' << window->hi << '\n';
    }
    write_points_text(os, P);
  });
  return 0;
}

// --- computations -----------------------------------------------------

int run_maxima(const Common& c, int pattern) {
  const PointSet P = load(c);
  json j = json::object();
  std::vector<std::pair<int, std::vector<PointId>>> rows;
  for (auto k : SignPattern::all()) {
    if (pattern != 0 && k.index() != pattern) continue;
    rows.emplace_back(k.index(), maxima3d(P, k).ids);
  }
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      for (const auto& [k, ids] : rows) j[std::to_string(k)] = ids;
      os << j.dump() << '\n';
      return;
    }
    for (const auto& [k, ids] : rows) {
      os << k << ':' << (ids.empty() ? "" : " ");
      print_ids(os, ids);
    }
  });
  return 0;
}

int run_vertices(const Common& c) {
  const auto ids = rch_vertices(load(c));
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      os << json(ids).dump() << '\n';
    } else {
      for (PointId id : ids) os << id << '\n';
    }
  });
  return 0;
}

int run_hull(const Common& c, bool events_only, bool triangulate, double theta) {
  const PointSet P = load(c);
  if (events_only) {
    auto ev = rch3_events(theta == 0.0 ? P : rotate_z(P, -theta));
    emit(c, [&](std::ostream& os) {
      if (c.fmt() == "json") {
        os << events_json(ev).dump() << '\n';
        return;
      }
      os.precision(17);
      for (const auto& e : ev.events) {
        os << e.id << ' ' << e.z;
        for (int k = 0; k < 8; ++k) {
          const auto& d = e.deltas[static_cast<std::size_t>(k)];
          if (!d.empty()) os << ' ' << k + 1 << ":+" << d.added.size() << "-" << d.removed.size();
        }
        os << '\n';
      }
      os << "# staircase changes " << ev.total_changes() << '\n';
    });
    return 0;
  }
  const SlabMesh m = rch3_at_theta(P, theta);
  emit(c, [&](std::ostream& os) {
    const std::string f = c.fmt();
    if (f == "json") {
      os << mesh_json(m).dump() << '\n';
    } else if (f == "off") {
      write_off(os, extract_faces(m), triangulate);
    } else {
      os << "events " << m.events.size() << "\nslabs " << m.slabs.size() << "\ncomponents " << components(m) << '\n';
      std::string chi = "undefined (no solid interior)";
      try {
        chi = std::to_string(euler_characteristic(m));
      } catch (const DegenerateMeshError&) {
      }
      os << "euler " << chi << '\n';
    }
  });
  return 0;
}

int run_slice(const Common& c, double z) {
  const auto rs = slice(load(c), z);
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      os << regions_json(rs).dump() << '\n';
    } else {
      print_regions(os, rs);
    }
  });
  return 0;
}

int run_intervals(const Common& c) {
  const auto tab = active_intervals(load(c));
  emit(c, [&](std::ostream& os) {
    const std::string f = c.fmt();
    if (f == "json") {
      os << activity_json(tab).dump() << '\n';
    } else if (f == "csv") {
      os.precision(12);
      os << "id,lo,hi,wraps\n";
      for (const auto& a : tab.points)
        for (const auto& iv : a.merged.intervals()) os << a.id << ',' << iv.lo << ',' << iv.hi << ',' << iv.wraps << '\n';
    } else {
      for (const auto& a : tab.points) os << a.id << ':' << arc_text(a.merged) << '\n';
    }
  });
  return 0;
}

int run_active(const Common& c, double theta) {
  const auto ids = active_at(active_intervals(load(c)), normalize_angle(theta));
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      os << json(ids).dump() << '\n';
    } else {
      for (PointId id : ids) os << id << '\n';
    }
  });
  return 0;
}

int run_layers(const Common& c) {
  const auto L = layers(load(c));
  emit(c, [&](std::ostream& os) {
    if (c.fmt() == "json") {
      os << json(L).dump() << '\n';
    } else {
      for (const auto& l : L) print_ids(os, l);
    }
  });
  return 0;
}

int run_export(const Common& c, const std::string& what, double z, double theta) {
  const PointSet P = load(c);
  const std::string f = c.fmt() == "text" && what != "points" ? "json" : c.fmt();
  emit(c, [&](std::ostream& os) {
    if (what == "points") {
      if (f == "json") {
        os << points_json(P).dump() << '\n';
      } else {
        write_points_text(os, P);
      }
    } else if (what == "mesh") {
      const SlabMesh m = rch3_at_theta(P, theta);
      if (f == "off") {
        write_off(os, extract_faces(m), false);
      } else {
        os << mesh_json(m).dump(1) << '\n';
      }
    } else if (what == "events") {
      os << events_json(rch3_events(P)).dump(1) << '\n';
    } else if (what == "slice") {
      os << regions_json(slice(P, z)).dump(1) << '\n';
    } else {
      os << activity_json(active_intervals(P)).dump(1) << '\n';
    }
  });
  return 0;
}

// --- verify -------------------------------------------------------------

struct Tally {
  std::atomic<std::size_t> checks{0};
  std::atomic<std::size_t> mismatches{0};
  std::mutex mu;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++mismatches;
    std::lock_guard lock(mu);
    if (notes.size() < 20) notes.push_back(what);
  }
};

bool same_arcs(const IntervalSet& a, const IntervalSet& b, double tol) {
  if (a.size() != b.size()) return false;
  auto dist = [](double x, double y) {
    const double d = normalize_angle(x - y);
    return std::min(d, kTwoPi - d);
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dist(a.intervals()[i].lo, b.intervals()[i].lo) > tol || dist(a.intervals()[i].hi, b.intervals()[i].hi) > tol)
      return false;
  return true;
}

void verify_instance(const std::string& what, const PointSet& P, std::uint64_t seed, Tally& t) {
  const std::string tag = what + " seed " + std::to_string(seed);
  if (what == "maxima") {
    for (auto k : SignPattern::all())
      t.expect(maxima3d(P, k).ids == brute_maxima(P, k), tag + " pattern " + std::to_string(k.index()));
  } else if (what == "vertices") {
    t.expect(rch_vertices(P) == brute_vertices(P), tag);
  } else if (what == "layers") {
    t.expect(layers(P) == brute_layers(P), tag);
  } else if (what == "slice") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> height(-0.9, 0.9);
    for (int h = 0; h < 5; ++h) {
      const double c = height(rng);
      const RegionSet rs = slice(P, c);
      std::vector<double> xs, ys;
      for (const auto& r : rs)
        for (const auto& v : r.boundary()) {
          xs.push_back(v.x);
          ys.push_back(v.y);
        }
      auto near = [](const std::vector<double>& g, double v) {
        return std::any_of(g.begin(), g.end(), [&](double w) { return std::abs(w - v) < 1e-9; });
      };
      std::size_t bad = 0;
      for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) {
          const double x = -1 + (i + 0.5) / 25.0, y = -1 + (j + 0.5) / 25.0;
          if (near(xs, x) || near(ys, y)) continue;
          bad += rs.contains(x, y) != brute_member({x, y, c, 0}, P);
        }
      t.expect(bad == 0, tag + " height " + std::to_string(c));
    }
  } else if (what == "intervals") {
    const auto fast = active_intervals(P);
    const auto slow = brute_active_intervals(P);
    for (std::size_t i = 0; i < P.size(); ++i)
      t.expect(same_arcs(fast.points[i].up, slow.points[i].up, 1e-7) &&
                   same_arcs(fast.points[i].down, slow.points[i].down, 1e-7) &&
                   same_arcs(fast.points[i].merged, slow.points[i].merged, 1e-7),
               tag + " point " + std::to_string(i));
  } else if (what == "rotation") {
    const auto tab = active_intervals(P);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int k = 0; k < 100; ++k) {
      const double th = angle(rng);
      t.expect(active_at(tab, th) == rch_vertices(rotate_z(P, -th)), tag + " theta " + std::to_string(th));
    }
  }
}

int run_verify(const Common& c, const std::string& what, std::size_t n, std::size_t seeds) {
  if (n > kOracleCap && (what == "intervals" || what == "layers"))
    throw std::invalid_argument("verify " + what + ": n exceeds the oracle cap of " + std::to_string(kOracleCap));
  Tally t;
  parallel_for(seeds, [&](std::size_t s) {
    const std::uint64_t seed = c.seed + s;
    verify_instance(what, uniform_box(n, seed), seed, t);
  });
  emit(c, [&](std::ostream& os) {
    os << "verify " << what << ": n " << n << ", " << seeds << " instances, " << t.checks << " checks, " << t.mismatches
       << " mismatches\n";
    for (const auto& note : t.notes) os << "  mismatch: " << note << '\n';
  });
  return t.mismatches == 0 ? 0 : 2;
}

// --- bench ----------------------------------------------------------------

// Keeps the timed result observable.
volatile std::size_t g_sink = 0;

double time_once(const std::string& subject, const PointSet& P) {
  const auto t0 = std::chrono::steady_clock::now();
  if (subject == "maxima") {
    g_sink = rch_vertices(P).size();
  } else if (subject == "hull") {
    g_sink = rch3(P).slabs.size();
  } else {
    g_sink = active_intervals(P).points.size();
  }
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int run_bench(const Common& c, const std::string& subject, std::vector<std::size_t> sizes, std::size_t seeds) {
  if (sizes.empty()) {
    const int lo = subject == "intervals" ? 12 : 14;
    const int hi = subject == "intervals" ? 17 : 20;
    for (int e = lo; e <= hi; ++e) sizes.push_back(std::size_t{1} << e);
  }
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw std::invalid_argument("bench: sizes must be ascending");
  std::vector<double> medians, ratios;
  for (std::size_t n : sizes) {
    std::vector<double> runs;
    for (std::size_t s = 0; s < seeds; ++s) runs.push_back(time_once(subject, uniform_box(n, c.seed + s)));
    medians.push_back(median(runs));
    if (medians.size() > 1) ratios.push_back(medians.back() / medians[medians.size() - 2]);
  }
  emit(c, [&](std::ostream& os) {
    os << "subject,n,median_seconds,ratio\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      os << subject << ',' << sizes[i] << ',' << medians[i] << ',';
      if (i > 0) os << ratios[i - 1];
      os << '\n';
    }
    if (!ratios.empty()) os << "# median doubling ratio " << median(ratios) << '\n';
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectilinear convex hulls, maxima and rotation intervals of 3D point sets"};
  app.require_subcommand(1);
  Common c;
  const std::vector<std::string> text_json{"text", "json"};

  GenOptions g;
  auto* gen = app.add_subcommand("gen", "generate a point set");
  add_common(gen, c, false, text_json);
  gen->add_option("family", g.family)
      ->required()
      ->check(CLI::IsMember({"uniform-box", "sphere-surface", "grid-perturbed", "torus-cubes", "cylinder-geodesic",
                             "box-corners", "two-points"}));
  gen->add_option("--n", g.n);
  gen->add_option("--extent", g.extent, "half extents of the box")->expected(3);
  gen->add_option("--eps", g.eps, "perturbation for grid, box and torus families");
  gen->add_option("--radius", g.cyl.radius);
  gen->add_option("--arc-span", g.cyl.arc_span);
  gen->add_option("--pitch", g.cyl.pitch);
  gen->add_option("--anchors", g.cyl.anchors)->check(CLI::Range(0, 8));
  gen->add_flag("--report-window", g.report_window, "print the rotation window of a cylinder instance to stderr");

  int pattern = 0;
  auto* maxima = app.add_subcommand("maxima", "maxima sets for the eight sign patterns");
  add_common(maxima, c, true, text_json);
  maxima->add_option("--pattern", pattern)->check(CLI::Range(1, 8));

  auto* vertices = app.add_subcommand("vertices", "ids of the hull vertices");
  add_common(vertices, c, true, text_json);

  bool events_only = false, triangulate = false;
  double theta = 0.0, z = 0.0;
  auto* hull = app.add_subcommand("hull", "three-dimensional hull as a slab mesh");
  add_common(hull, c, true, {"text", "json", "off"});
  hull->add_flag("--events-only", events_only, "only the staircase changes per event");
  hull->add_flag("--triangulate", triangulate, "split quads for OFF output");
  hull->add_option("--theta", theta, "frame rotation about z");

  auto* sl = app.add_subcommand("slice", "cross-section at a height");
  add_common(sl, c, true, text_json);
  sl->add_option("--z", z)->required();

  auto* intervals = app.add_subcommand("intervals", "rotation intervals during which each point is a vertex");
  add_common(intervals, c, true, {"text", "json", "csv"});

  auto* active = app.add_subcommand("active", "vertices of the hull in a rotated frame");
  add_common(active, c, true, text_json);
  active->add_option("--theta", theta)->required();

  auto* lay = app.add_subcommand("layers", "rectilinear convex layers");
  add_common(lay, c, true, text_json);

  std::string what = "maxima";
  std::size_t n = 200, seeds = 10;
  auto* verify = app.add_subcommand("verify", "compare against the brute-force oracles on random instances");
  add_common(verify, c, false, {"text"});
  verify->add_option("--what", what)
      ->check(CLI::IsMember({"maxima", "vertices", "slice", "intervals", "rotation", "layers"}));
  verify->add_option("--n", n);
  verify->add_option("--seeds", seeds);

  std::string subject;
  std::vector<std::size_t> sizes;
  std::size_t runs = 3;
  auto* bench = app.add_subcommand("bench", "median timings over doubling sizes, as CSV");
  add_common(bench, c, false, {"csv"});
  bench->add_option("subject", subject)->required()->check(CLI::IsMember({"maxima", "hull", "intervals"}));
  bench->add_option("--sizes", sizes, "ascending point counts");
  bench->add_option("--seeds", runs, "runs per size");

  std::string export_what = "mesh";
  auto* exp = app.add_subcommand("export", "export one result in a machine format");
  add_common(exp, c, true, {"text", "json", "off"});
  exp->add_option("--what", export_what)->check(CLI::IsMember({"points", "mesh", "events", "slice", "intervals"}));
  exp->add_option("--z", z);
  exp->add_option("--theta", theta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return run_gen(c, g);
    if (*maxima) return run_maxima(c, pattern);
    if (*vertices) return run_vertices(c);
    if (*hull) return run_hull(c, events_only, triangulate, theta);
    if (*sl) return run_slice(c, z);
    if (*intervals) return run_intervals(c);
    if (*active) return run_active(c, theta);
    if (*lay) return run_layers(c);
    if (*verify) return run_verify(c, what, n, seeds);
    if (*bench) return run_bench(c, subject, sizes, runs);
    if (*exp) return run_export(c, export_what, z, theta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
