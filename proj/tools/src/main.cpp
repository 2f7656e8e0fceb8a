#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include <r3s2/branch_points.hpp>
#include <r3s2/eigensystem.hpp>
#include <r3s2/field.hpp>
#include <r3s2/frequency_grid.hpp>
#include <r3s2/glyphs.hpp>
#include <r3s2/histogram.hpp>
#include <r3s2/r3s2_io.hpp>
#include <r3s2/random_walk.hpp>
#include <r3s2/shift_twist.hpp>
#include <r3s2/synthesis.hpp>

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Writes content through a temp file + rename so readers never see partial
/// output.
void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void atomic_save_field(const r3s2::R3S2Field& field, const std::string& path) {
  const std::string tmp = path + ".tmp";
  r3s2::save_field(field, tmp);
  std::filesystem::rename(tmp, path);
}

void write_manifest(const std::string& out_path, const json& manifest) {
  atomic_write_text(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

json base_manifest(const std::string& subcommand) {
  json m;
  m["subcommand"] = subcommand;
  m["version"] = R3S2_VERSION;
  return m;
}

struct KernelArgs {
  std::string process = "diffusion";
  double d33 = 1.0, d44 = 0.1, d11 = 0.0;
  double t = -1.0, alpha = -1.0;
  int gamma_k = 1;
  int lmax = 12;
  int grid_n = 32;
  int grid_eta = 8;
  int samples = -1;  ///< icosphere refinement for samples output, -1 = SH
  std::string out;
};

r3s2::ProcessParams to_params(const KernelArgs& a) {
  r3s2::ProcessParams p;
  if (a.process == "diffusion") {
    p.process = r3s2::ProcessKind::Diffusion;
  } else if (a.process == "completion") {
    p.process = r3s2::ProcessKind::Completion;
  } else {
    p.process = r3s2::ProcessKind::Elliptic;
  }
  p.D33 = a.d33;
  p.D44 = a.d44;
  p.D11 = a.d11;
  if (a.t >= 0.0) p.t = a.t;
  if (a.alpha > 0.0) p.alpha = a.alpha;
  p.gamma_k = a.gamma_k;
  return p;
}

int run_kernel(const KernelArgs& a) {
  if ((a.t < 0.0) == (a.alpha <= 0.0)) {
    std::fprintf(stderr, "kernel: exactly one of --t or --alpha is required\n");
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const r3s2::FrequencyGrid grid = r3s2::make_grid(a.grid_n, a.grid_eta);
  const r3s2::ProcessParams p = to_params(a);
  const r3s2::EvolutionOp op = a.t >= 0.0 ? r3s2::EvolutionOp::Evolve
                                          : r3s2::EvolutionOp::GammaResolvent;
  r3s2::R3S2Field field = r3s2::compute_spatial_kernel(grid, p, a.lmax, op);
  const double compute_s = seconds_since(t0);

  double imag_residue = 0.0;
  if (a.samples >= 0) {
    field = r3s2::sh_to_samples(field, r3s2::icosphere_sampling(a.samples), &imag_residue);
  }
  atomic_save_field(field, a.out);

  json m = base_manifest("kernel");
  m["params"] = {{"process", a.process}, {"d33", a.d33},       {"d44", a.d44},
                 {"d11", a.d11},         {"t", a.t},           {"alpha", a.alpha},
                 {"gamma_k", a.gamma_k}, {"lmax", a.lmax},     {"grid_n", a.grid_n},
                 {"grid_eta", a.grid_eta}, {"samples", a.samples}};
  m["voxel_size"] = field.voxel_size;
  if (a.samples >= 0) {
    m["mass"] = r3s2::field_mass(field);
    m["imag_residue"] = imag_residue;
  }
  m["timings"] = {{"compute_s", compute_s}, {"total_s", seconds_since(t0)}};
  write_manifest(a.out, m);
  return 0;
}

struct MonteCarloArgs {
  std::string process = "diffusion";
  long walks = 100000;
  int steps = 200;
  double t = -1.0, alpha = -1.0;
  int gamma_k = 1;
  double d33 = 1.0, d44 = 0.1;
  std::uint64_t seed = 0;
  int hist_n = 16;
  double hist_voxel = 0.0;  ///< 0: derived from walk scale
  int hist_refine = 3;
  std::string out;
};

int run_montecarlo(const MonteCarloArgs& a) {
  if ((a.t < 0.0) == (a.alpha <= 0.0)) {
    std::fprintf(stderr, "montecarlo: exactly one of --t or --alpha is required\n");
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  r3s2::WalkConfig cfg;
  cfg.process = a.process == "completion" ? r3s2::WalkProcess::Completion
                                          : r3s2::WalkProcess::Diffusion;
  cfg.walks = a.walks;
  cfg.steps = a.steps;
  cfg.t = a.t >= 0.0 ? a.t : 1.0 / a.alpha;
  cfg.D33 = a.d33;
  cfg.D44 = a.d44;
  cfg.seed = a.seed;
  cfg.alpha = a.alpha;
  cfg.gamma_k = a.gamma_k;
  const r3s2::RandomWalkBatch batch =
      a.t >= 0.0 ? r3s2::simulate(cfg) : r3s2::simulate_resolvent(cfg);
  const double simulate_s = seconds_since(t0);

  r3s2::HistogramSpec spec;
  spec.n_half = a.hist_n;
  spec.sphere_refinement = a.hist_refine;
  if (a.hist_voxel > 0.0) {
    spec.voxel_size = a.hist_voxel;
  } else {
    // Cover about 4 standard deviations of the spatial spread.
    const double sigma = std::sqrt(2.0 * cfg.t * std::max(cfg.D33, 1e-12));
    spec.voxel_size = 4.0 * sigma / spec.n_half;
  }
  const r3s2::R3S2Field hist = r3s2::bin_endpoints(batch, spec);
  atomic_save_field(hist, a.out);

  // Endpoint dump: 6 x f64 per walk.
  {
    const std::string tmp = a.out + ".endpoints.bin.tmp";
    std::ofstream dump(tmp, std::ios::binary | std::ios::trunc);
    for (const r3s2::Endpoint& e : batch.endpoints) {
      dump.write(reinterpret_cast<const char*>(e.y.data()), 24);
      dump.write(reinterpret_cast<const char*>(e.n.data()), 24);
    }
    if (!dump) throw std::runtime_error("cannot write endpoint dump");
    dump.close();
    std::filesystem::rename(tmp, a.out + ".endpoints.bin");
  }

  json m = base_manifest("montecarlo");
  m["params"] = {{"process", a.process},   {"walks", a.walks},
                 {"steps", a.steps},       {"t", a.t},
                 {"alpha", a.alpha},       {"gamma_k", a.gamma_k},
                 {"d33", a.d33},           {"d44", a.d44},
                 {"seed", a.seed},         {"hist_n", a.hist_n},
                 {"hist_voxel", spec.voxel_size}, {"hist_refine", a.hist_refine}};
  m["mass"] = r3s2::field_mass(hist);
  m["timings"] = {{"simulate_s", simulate_s}, {"total_s", seconds_since(t0)}};
  write_manifest(a.out, m);
  return 0;
}

int run_enhance(const std::string& kernel_path, const std::string& input_path,
                const std::string& out_path, int lmax) {
  const auto t0 = std::chrono::steady_clock::now();
  const r3s2::R3S2Field kernel = r3s2::load_field(kernel_path);
  const r3s2::R3S2Field input = r3s2::load_field(input_path);
  r3s2::R3S2Field out;
  try {
    out = r3s2::shift_twist_convolve(kernel, input, lmax);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "enhance: %s\n", e.what());
    return 2;
  }
  atomic_save_field(out, out_path);
  json m = base_manifest("enhance");
  m["params"] = {{"kernel", kernel_path}, {"input", input_path}, {"lmax", lmax}};
  m["timings"] = {{"total_s", seconds_since(t0)}};
  write_manifest(out_path, m);
  return 0;
}

int run_glyphs(const std::string& input_path, const std::string& out_path, int spacing,
               double scale) {
  const auto t0 = std::chrono::steady_clock::now();
  r3s2::R3S2Field field = r3s2::load_field(input_path);
  if (field.storage == r3s2::R3S2Field::Storage::SH) {
    field = r3s2::sh_to_samples(field, r3s2::icosphere_sampling(2));
  }
  r3s2::GlyphOptions opt;
  opt.spacing = spacing;
  opt.scale = scale;
  long glyphs = 0;
  try {
    const std::string tmp = out_path + ".tmp";
    glyphs = r3s2::write_glyphs_obj(field, tmp, opt);
    std::filesystem::rename(tmp, out_path);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "glyphs: %s\n", e.what());
    return 2;
  }
  json m = base_manifest("glyphs");
  m["params"] = {{"input", input_path}, {"spacing", spacing}, {"scale", scale}};
  m["glyphs"] = glyphs;
  m["timings"] = {{"total_s", seconds_since(t0)}};
  write_manifest(out_path, m);
  return 0;
}

int run_eigencurves(int m_order, double rho_max, const std::string& out_path, int lmax,
                    int samples, double resolution) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string csv = "m,l_index,rho,re,im\n";
  for (int s = 0; s <= samples; ++s) {
    const double rho = rho_max * s / samples;
    const r3s2::SpheroidalEigensystem es = r3s2::gswe_eigensystem(m_order, rho, lmax);
    for (int i = 0; i < es.size(); ++i) {
      char line[128];
      std::snprintf(line, sizeof(line), "%d,%d,%.9g,%.12g,%.12g\n", m_order, i, rho,
                    es.eigenvalues(i).real(), es.eigenvalues(i).imag());
      csv += line;
    }
  }
  atomic_write_text(out_path, csv);

  const r3s2::BranchPointList branches =
      r3s2::detect_branch_points(m_order, rho_max, resolution, lmax);
  std::string bcsv = "m,rho\n";
  for (double rho : branches.points) {
    char line[64];
    std::snprintf(line, sizeof(line), "%d,%.9g\n", m_order, rho);
    bcsv += line;
  }
  atomic_write_text(out_path + ".branch.csv", bcsv);

  json m = base_manifest("eigencurves");
  m["params"] = {{"m", m_order},     {"rho_max", rho_max}, {"lmax", lmax},
                 {"samples", samples}, {"resolution", resolution}};
  m["branch_points"] = branches.points;
  m["timings"] = {{"total_s", seconds_since(t0)}};
  write_manifest(out_path, m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate convolution kernels on R^3 x S^2"};
  app.require_subcommand(1);

  KernelArgs ka;
  CLI::App* kernel = app.add_subcommand("kernel", "Compute a kernel on a frequency grid");
  kernel->add_option("--process", ka.process)
      ->check(CLI::IsMember({"diffusion", "completion", "elliptic"}));
  kernel->add_option("--d33", ka.d33);
  kernel->add_option("--d44", ka.d44)->check(CLI::PositiveNumber);
  kernel->add_option("--d11", ka.d11);
  kernel->add_option("--t", ka.t);
  kernel->add_option("--alpha", ka.alpha);
  kernel->add_option("--gamma-k", ka.gamma_k)->check(CLI::PositiveNumber);
  kernel->add_option("--lmax", ka.lmax)->check(CLI::NonNegativeNumber);
  kernel->add_option("--grid-n", ka.grid_n)->check(CLI::PositiveNumber);
  kernel->add_option("--grid-eta", ka.grid_eta)->check(CLI::PositiveNumber);
  kernel->add_option("--samples", ka.samples,
                     "Icosphere refinement for samples output (default: SH coefficients)");
  kernel->add_option("--out", ka.out)->required();

  MonteCarloArgs ma;
  CLI::App* mc = app.add_subcommand("montecarlo", "Random-walk oracle simulation");
  mc->add_option("--process", ma.process)->check(CLI::IsMember({"diffusion", "completion"}));
  mc->add_option("--walks", ma.walks)->check(CLI::PositiveNumber);
  mc->add_option("--steps", ma.steps)->check(CLI::PositiveNumber);
  mc->add_option("--t", ma.t);
  mc->add_option("--alpha", ma.alpha);
  mc->add_option("--gamma-k", ma.gamma_k)->check(CLI::PositiveNumber);
  mc->add_option("--d33", ma.d33);
  mc->add_option("--d44", ma.d44);
  mc->add_option("--seed", ma.seed);
  mc->add_option("--hist-n", ma.hist_n)->check(CLI::PositiveNumber);
  mc->add_option("--hist-voxel", ma.hist_voxel);
  mc->add_option("--hist-refine", ma.hist_refine)->check(CLI::NonNegativeNumber);
  mc->add_option("--out", ma.out)->required();

  std::string en_kernel, en_input, en_out;
  int en_lmax = 8;
  CLI::App* enhance = app.add_subcommand("enhance", "Shift-twist convolve a field");
  enhance->add_option("--kernel", en_kernel)->required()->check(CLI::ExistingFile);
  enhance->add_option("--input", en_input)->required()->check(CLI::ExistingFile);
  enhance->add_option("--lmax", en_lmax)->check(CLI::PositiveNumber);
  enhance->add_option("--out", en_out)->required();

  std::string gl_input, gl_out;
  int gl_spacing = 4;
  double gl_scale = 1.0;
  CLI::App* glyphs = app.add_subcommand("glyphs", "Export a glyph-field OBJ mesh");
  glyphs->add_option("--input", gl_input)->required()->check(CLI::ExistingFile);
  glyphs->add_option("--out", gl_out)->required();
  glyphs->add_option("--spacing", gl_spacing)->check(CLI::PositiveNumber);
  glyphs->add_option("--scale", gl_scale)->check(CLI::PositiveNumber);

  int ec_m = 0, ec_lmax = 16, ec_samples = 200;
  double ec_rho_max = 10.0, ec_resolution = 1e-3;
  std::string ec_out;
  CLI::App* eigencurves = app.add_subcommand("eigencurves", "Dump eigenvalue curves as CSV");
  eigencurves->add_option("--m", ec_m)->check(CLI::NonNegativeNumber);
  eigencurves->add_option("--rho-max", ec_rho_max)->check(CLI::PositiveNumber);
  eigencurves->add_option("--lmax", ec_lmax)->check(CLI::PositiveNumber);
  eigencurves->add_option("--samples", ec_samples)->check(CLI::PositiveNumber);
  eigencurves->add_option("--resolution", ec_resolution)->check(CLI::PositiveNumber);
  eigencurves->add_option("--out", ec_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kernel->parsed()) return run_kernel(ka);
    if (mc->parsed()) return run_montecarlo(ma);
    if (enhance->parsed()) return run_enhance(en_kernel, en_input, en_out, en_lmax);
    if (glyphs->parsed()) return run_glyphs(gl_input, gl_out, gl_spacing, gl_scale);
    if (eigencurves->parsed()) {
      return run_eigencurves(ec_m, ec_rho_max, ec_out, ec_lmax, ec_samples, ec_resolution);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
  return 0;
}
