// Copyright 2026 The archgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// archgeom: box-counting analysis, fractal generation, hyperbolic-plane
// calculations, dimension-table statistics and log-log plots.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numeric/domain error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "archgeom/archgeom.hpp"

namespace {

using namespace archgeom;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << data;
  if (!out) throw InputError("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// boxcount

struct BoxcountArgs {
  std::string image;
  std::optional<int> threshold;
  int levels = kDefaultLevels;
  unsigned threads = 1;
  std::string out;
  std::string csv;
};

int run_boxcount(const BoxcountArgs& a) {
  const GrayImage gray = read_pgm(read_file(a.image));
  const BinaryImage img = binarize(gray, a.threshold.value_or(default_threshold(gray.maxval)));
  const int levels = a.levels == 0 ? levels_to_resolution(img) : a.levels;
  const DimensionReport rep = analyze(img, levels, {a.threads}, a.image);

  std::cout << boxcount_table(rep);
  if (!a.out.empty()) {
    ReportDocument doc;
    doc.command = "boxcount";
    doc.inputs = {a.image};
    doc.report = to_json(rep);
    write_file(a.out, doc.dump());
  }
  if (!a.csv.empty()) write_file(a.csv, boxcount_csv(rep));
  return 0;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string kind;
  int level = 0;
  int size = 0;
  std::string out;
  bool ascii = false;
};

int run_generate(const GenerateArgs& a) {
  const auto kind = parse_fractal_kind(a.kind);
  if (!kind) throw UsageError("unknown fractal kind '" + a.kind + "'");
  const BinaryImage img = generate({*kind, a.level, a.size});
  write_file(a.out, write_pgm(to_gray(img), a.ascii));
  std::cout << to_string(*kind) << " level " << a.level << ": " << img.width() << "x" << img.height() << ", "
            << img.ink_count() << " ink pixels -> " << a.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// hyp

std::string fmt12(double v) { return format_fixed(v, 12); }

std::string fmt_complex(hyp::Complex z) {
  const std::string re = fmt12(z.real());
  std::string im = fmt12(z.imag());
  if (im.front() == '-') return re + " - " + im.substr(1) + "i";
  return re + " + " + im + "i";
}

nlohmann::json geodesic_json(const hyp::Geodesic& g) {
  if (const auto* r = std::get_if<hyp::VerticalRay>(&g)) return {{"type", "vertical_ray"}, {"foot", r->foot}};
  const auto& s = std::get<hyp::Semicircle>(g);
  return {{"type", "semicircle"}, {"center", s.center}, {"radius", s.radius}};
}

std::string geodesic_text(const hyp::Geodesic& g) {
  if (const auto* r = std::get_if<hyp::VerticalRay>(&g)) return "vertical_ray foot=" + fmt12(r->foot);
  const auto& s = std::get<hyp::Semicircle>(g);
  return "semicircle center=" + fmt12(s.center) + " radius=" + fmt12(s.radius);
}

struct HypArgs {
  std::string sub;
  std::vector<std::string> args;
  std::string out;
};

int run_hyp(const HypArgs& a) {
  std::vector<double> v;
  for (const auto& s : a.args) {
    if (!v.empty() || a.sub != "parallels" || (s != "ray" && s != "semi")) {
      const auto d = parse_double(s);
      if (!d) throw UsageError("not a number: '" + s + "'");
      v.push_back(*d);
    }
  }
  auto need = [&](std::size_t n, const char* usage) {
    if (v.size() != n) throw UsageError(std::string("usage: hyp ") + a.sub + " " + usage);
  };

  nlohmann::json payload{{"operation", a.sub}, {"arguments", v}};
  std::string text;

  if (a.sub == "dist-h") {
    need(4, "X1 Y1 X2 Y2");
    const double d = hyp::dist_half_plane({v[0], v[1]}, {v[2], v[3]});
    payload["distance"] = d;
    text = fmt12(d);
  } else if (a.sub == "dist-d") {
    need(4, "X1 Y1 X2 Y2");
    const double d = hyp::dist_disc({v[0], v[1]}, {v[2], v[3]});
    payload["distance"] = d;
    text = fmt12(d);
  } else if (a.sub == "to-disc") {
    need(2, "X Y");
    const auto w = hyp::to_disc({v[0], v[1]}).z();
    payload["re"] = w.real();
    payload["im"] = w.imag();
    text = fmt_complex(w);
  } else if (a.sub == "to-half") {
    need(2, "X Y");
    const auto w = hyp::to_half_plane({v[0], v[1]}).z();
    payload["re"] = w.real();
    payload["im"] = w.imag();
    text = fmt_complex(w);
  } else if (a.sub == "geodesic") {
    need(4, "X1 Y1 X2 Y2");
    const auto g = hyp::geodesic_through({v[0], v[1]}, {v[2], v[3]});
    payload["geodesic"] = geodesic_json(g);
    text = geodesic_text(g);
  } else if (a.sub == "parallels") {
    const bool ray = !a.args.empty() && a.args.front() == "ray";
    const bool semi = !a.args.empty() && a.args.front() == "semi";
    if (!ray && !semi) throw UsageError("usage: hyp parallels (ray FOOT | semi CENTER RADIUS) PX PY");
    need(ray ? 3 : 4, ray ? "ray FOOT PX PY" : "semi CENTER RADIUS PX PY");
    const hyp::Geodesic g = ray ? hyp::Geodesic{hyp::VerticalRay{v[0]}} : hyp::make_semicircle(v[0], v[1]);
    const hyp::HalfPlanePoint p(v[v.size() - 2], v[v.size() - 1]);
    const auto [g1, g2] = hyp::limiting_parallels(g, p);
    payload["line"] = geodesic_json(g);
    payload["parallels"] = {geodesic_json(g1), geodesic_json(g2)};
    text = geodesic_text(g1) + "\n" + geodesic_text(g2);
  } else if (a.sub == "angle-sum") {
    need(6, "AX AY BX BY CX CY");
    const hyp::HTriangle t({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
    const auto ang = t.angles();
    const double sum = ang[0] + ang[1] + ang[2];
    payload["angles"] = ang;
    payload["angle_sum"] = sum;
    payload["defect"] = std::numbers::pi - sum;
    text = "angles " + fmt12(ang[0]) + " " + fmt12(ang[1]) + " " + fmt12(ang[2]) + "\nsum " + fmt12(sum) +
           "\ndefect " + fmt12(std::numbers::pi - sum);
  } else if (a.sub == "pythagoras") {
    need(3, "R U V");
    const auto t = hyp::pythagoras_terms(v[0], v[1], v[2]);
    payload["cosh_a"] = t.cosh_a;
    payload["cosh_b"] = t.cosh_b;
    payload["cosh_c"] = t.cosh_c;
    payload["residual"] = t.residual;
    text = "cosh a " + fmt12(t.cosh_a) + "\ncosh b " + fmt12(t.cosh_b) + "\ncosh c " + fmt12(t.cosh_c) +
           "\nresidual " + format_shortest(t.residual);
  } else {
    throw UsageError("unknown hyp operation '" + a.sub +
                     "' (dist-h, dist-d, to-disc, to-half, geodesic, parallels, angle-sum, pythagoras)");
  }

  std::cout << text << "\n";
  if (!a.out.empty()) {
    ReportDocument doc;
    doc.command = "hyp " + a.sub;
    doc.report = payload;
    write_file(a.out, doc.dump());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  std::string csv;
  std::string pairs;
  std::string out;
};

int run_stats(const StatsArgs& a) {
  const auto cols = parse_dim_csv(read_file(a.csv));
  auto find = [&](const std::string& label) -> const DimSeries& {
    for (const auto& c : cols) {
      if (c.label == label) return c;
    }
    throw UsageError("no column named '" + label + "'");
  };

  std::vector<std::pair<std::string, std::string>> pairs;
  if (!a.pairs.empty()) {
    std::stringstream ss(a.pairs);
    std::string item;
    while (std::getline(ss, item, ';')) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) throw UsageError("--pairs expects colA,colB[;colC,colD...]");
      pairs.emplace_back(item.substr(0, comma), item.substr(comma + 1));
    }
  }

  nlohmann::json series = nlohmann::json::object();
  std::cout << "column\tn\tmean\tstd\n";
  for (const auto& c : cols) {
    const auto st = summarize(c);
    series[c.label] = to_json(st);
    std::cout << c.label << "\t" << st.n << "\t" << format_fixed(st.mean, 3) << "\t"
              << format_fixed(st.sample_std, 3) << "\n";
  }
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& [x, y] : pairs) {
    const double r = pearson(find(x), find(y));
    corr.push_back({{"a", x}, {"b", y}, {"pearson", r}});
    std::cout << "pearson(" << x << ", " << y << ")\t" << format_fixed(r, 3) << "\n";
  }
  if (!a.out.empty()) {
    ReportDocument doc;
    doc.command = "stats";
    doc.inputs = {a.csv};
    doc.report = {{"series", series}, {"correlations", corr}};
    write_file(a.out, doc.dump());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// plot

int run_plot(const std::string& report, const std::string& svg) {
  const BoxCountSeries s = series_from_json(ReportDocument::parse(read_file(report)).report);
  if (s.records.size() < 2) throw DomainError("plot needs at least 2 records");
  write_file(svg, render_loglog_svg(s));
  std::cout << "slope = " << format_fixed(fit_dimension(s), 3) << " -> " << svg << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic-plane calculations and box-counting fractal analysis", "archgeom"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  BoxcountArgs bc;
  auto* boxcount = app.add_subcommand("boxcount", "Box-counting dimension of a PGM line drawing");
  boxcount->add_option("image", bc.image, "PGM file (P2 or P5)")->required();
  boxcount->add_option("--threshold", bc.threshold, "Ink iff pixel < threshold (default ceil((maxval+1)/2), 128 for 8-bit)");
  boxcount->add_option("--levels", bc.levels, "Number of box sizes, halving from the ink extent (0 = down to 1 pixel)")->capture_default_str();
  boxcount->add_option("--threads", bc.threads, "Worker threads for counting (0 = all cores)")->capture_default_str();
  boxcount->add_option("--out", bc.out, "Write the structured JSON report here");
  boxcount->add_option("--csv", bc.csv, "Write delta,count,pairwise_dim rows here");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Rasterize a reference fractal to PGM");
  generate_cmd->add_option("kind", gen.kind,
                           "koch_curve | sierpinski_triangle | sierpinski_carpet | cantor_dust | line | filled_square")
      ->required();
  generate_cmd->add_option("--level", gen.level, "Construction depth")->capture_default_str();
  generate_cmd->add_option("--size", gen.size, "Canvas edge in pixels")->required();
  generate_cmd->add_option("--out", gen.out, "Output PGM path")->required();
  generate_cmd->add_flag("--ascii", gen.ascii, "Write plain P2 instead of raw P5");

  HypArgs hy;
  auto* hyp_cmd = app.add_subcommand("hyp", "Hyperbolic-plane calculations");
  hyp_cmd->add_option("--out", hy.out, "Write the structured JSON report here");
  hyp_cmd->add_option("operation", hy.sub,
                      "dist-h | dist-d | to-disc | to-half | geodesic | parallels | angle-sum | pythagoras")
      ->required();
  hyp_cmd->add_option("args", hy.args, "Numeric arguments");
  hyp_cmd->positionals_at_end();

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Mean, sample std and Pearson correlation of CSV columns");
  stats_cmd->add_option("csv", st.csv, "CSV with a header row and one numeric column per series")->required();
  stats_cmd->add_option("--pairs", st.pairs, "Correlate columns: colA,colB[;colC,colD...]");
  stats_cmd->add_option("--out", st.out, "Write the structured JSON report here");

  std::string plot_report, plot_svg;
  auto* plot_cmd = app.add_subcommand("plot", "Log-log SVG plot of a boxcount report");
  plot_cmd->add_option("report", plot_report, "JSON report written by boxcount --out")->required();
  plot_cmd->add_option("svg", plot_svg, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*boxcount) return run_boxcount(bc);
    if (*generate_cmd) return run_generate(gen);
    if (*hyp_cmd) return run_hyp(hy);
    if (*stats_cmd) return run_stats(st);
    if (*plot_cmd) return run_plot(plot_report, plot_svg);
  } catch (const UsageError& e) {
    std::cerr << "archgeom: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "archgeom: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "archgeom: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
