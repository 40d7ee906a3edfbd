// Command-line front end: every subcommand is a thin adapter over the
// library, with stable file formats, explicit seeds and sysexits-style codes
// (64 usage, 65 domain, 74 I/O). Verdict subcommands encode their result in
// the exit code: check 0=INSIDE 1=OUTSIDE 2=BOUNDARY 3=method disagreement,
// ppt 0=SEPARABLE 1=ENTANGLED 2=PPT_INCONCLUSIVE.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bloch/bloch.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitIo = 74;

using bloch::format_real;

double default_tol() {
  if (const char* env = std::getenv("BLOCH_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) return tol;
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return bloch::kDefaultTol;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw bloch::IoError("cannot open '" + path + "' for writing");
  return file;
}

int run_generators(int n, bool as_json, bool as_csv) {
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(n);
  if (as_json) {
    std::cout << '[';
    for (int i = 0; i < basis.dim(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << bloch::matrix_to_json(basis.matrices[i]);
    }
    std::cout << "]\n";
  } else if (as_csv) {
    std::cout << "matrix,row,col,re,im\n";
    for (int i = 0; i < basis.dim(); ++i)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const bloch::cplx e = basis.matrices[i](r, c);
          std::cout << i + 1 << ',' << r + 1 << ',' << c + 1 << ',' << format_real(e.real())
                    << ',' << format_real(e.imag()) << '\n';
        }
  } else {
    for (int i = 0; i < basis.dim(); ++i) {
      std::cout << "lambda_" << i + 1 << ":\n";
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          const bloch::cplx e = basis.matrices[i](r, c);
          std::cout << "  (" << format_real(e.real()) << ", " << format_real(e.imag()) << ")";
        }
        std::cout << '\n';
      }
    }
  }
  return 0;
}

int run_structure_constants(int n) {
  const bloch::StructureConstants sc =
      bloch::compute_structure_constants(bloch::build_generator_basis(n));
  std::map<bloch::StructureConstants::Key, std::pair<double, double>> rows;
  for (const auto& [key, value] : sc.f) rows[key].first = value;
  for (const auto& [key, value] : sc.g) rows[key].second = value;
  std::cout << "i,j,k,f,g\n";
  for (const auto& [key, fg] : rows)
    std::cout << key[0] << ',' << key[1] << ',' << key[2] << ',' << format_real(fg.first) << ','
              << format_real(fg.second) << '\n';
  return 0;
}

bloch::BlochVector read_vector(int n, const std::string& arg) {
  const bloch::RVector components = bloch::vector_from_json(bloch::load_json_arg(arg));
  if (components.size() != bloch::generator_count(n))
    throw bloch::DomainError("vector has " + std::to_string(components.size()) +
                             " components; expected " +
                             std::to_string(bloch::generator_count(n)));
  return bloch::BlochVector{n, components};
}

bloch::DensityCandidate read_matrix(const std::string& arg) {
  const bloch::CMatrix m = bloch::matrix_from_json(bloch::load_json_arg(arg));
  if (m.rows() != m.cols()) throw bloch::DomainError("matrix must be square");
  bloch::DensityCandidate rho{static_cast<int>(m.rows()), m};
  bloch::validate_density_candidate(rho);
  return rho;
}

int run_to_rho(int n, const std::string& vector_arg) {
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(n);
  const bloch::DensityCandidate rho = bloch_to_matrix(read_vector(n, vector_arg), basis);
  std::cout << bloch::matrix_to_json(rho.matrix) << '\n';
  return 0;
}

int run_to_bloch(const std::string& matrix_arg) {
  const bloch::DensityCandidate rho = read_matrix(matrix_arg);
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(rho.n);
  const bloch::BlochVector v = matrix_to_bloch(rho, basis);
  std::cout << bloch::vector_to_json(v.components) << '\n';
  return 0;
}

void print_verdict_human(const char* label, const bloch::MembershipVerdict& verdict,
                         const char* margin_prefix) {
  std::cout << label << ": " << to_string(verdict.decision) << '\n';
  for (std::size_t i = 0; i < verdict.margins.size(); ++i)
    std::cout << "  " << margin_prefix << i + 1 << " = " << format_real(verdict.margins[i])
              << '\n';
  if (verdict.failing_index)
    std::cout << "  failing index: " << *verdict.failing_index << '\n';
}

std::string verdict_json(const bloch::MembershipVerdict& verdict) {
  std::string out = "{\"decision\": \"";
  out += to_string(verdict.decision);
  out += "\", \"margins\": [";
  for (std::size_t i = 0; i < verdict.margins.size(); ++i) {
    if (i) out += ", ";
    out += format_real(verdict.margins[i]);
  }
  out += "], \"failing_index\": ";
  out += verdict.failing_index ? std::to_string(*verdict.failing_index) : "null";
  out += "}";
  return out;
}

int exit_code_of(bloch::Decision d) {
  switch (d) {
    case bloch::Decision::Inside: return 0;
    case bloch::Decision::Outside: return 1;
    case bloch::Decision::Boundary: return 2;
  }
  return kExitDomain;
}

int run_check(int n, const std::string& vector_arg, double tol, const std::string& method,
              bool as_json) {
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(n);
  const bloch::BlochVector v = read_vector(n, vector_arg);

  std::optional<bloch::MembershipVerdict> coeff, eigen;
  if (method == "coeff" || method == "both") coeff = bloch::is_bloch_vector(v, basis, tol);
  if (method == "eigen" || method == "both")
    eigen = bloch::eigenvalue_oracle(bloch::bloch_to_matrix(v, basis), tol);

  if (as_json) {
    std::cout << "{\"tol\": " << format_real(tol);
    if (coeff) std::cout << ", \"coefficients\": " << verdict_json(*coeff);
    if (eigen) std::cout << ", \"eigenvalues\": " << verdict_json(*eigen);
    std::cout << "}\n";
  } else {
    if (coeff) print_verdict_human("coefficient test", *coeff, "a_");
    if (eigen) print_verdict_human("eigenvalue test", *eigen, "eig_");
  }

  if (coeff && eigen && coeff->decision != eigen->decision) return 3;
  return exit_code_of(coeff ? coeff->decision : eigen->decision);
}

int run_section(int i, int j, int res, const std::string& out_path,
                const std::string& boundary_path, double tol) {
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(3);
  bloch::SectionSpec spec;
  spec.i = i;
  spec.j = j;
  spec.resolution = res;

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "lambda_i,lambda_j,class\n";
  for (const bloch::GridVerdict& gv : bloch::sample_section(spec, basis, tol))
    out << format_real(gv.li) << ',' << format_real(gv.lj) << ',' << to_string(gv.cell) << '\n';

  if (!boundary_path.empty()) {
    std::ofstream bfile(boundary_path);
    if (!bfile) throw bloch::IoError("cannot open '" + boundary_path + "' for writing");
    const auto [ci, cj] = bloch::canonical_section_axes(i, j);
    const bool swapped = (ci != i);
    bfile << "segment,lambda_i,lambda_j\n";
    for (const bloch::BoundarySegment& seg :
         bloch::section_boundary(bloch::classify_section(i, j))) {
      for (const auto& [s, t] : seg.points) {
        const double x = swapped ? t : s;
        const double y = swapped ? s : t;
        bfile << seg.name << ',' << format_real(x) << ',' << format_real(y) << '\n';
      }
    }
  }
  return 0;
}

int run_ppt(const std::string& dims_text, const std::string& matrix_arg, double tol) {
  const auto sep = dims_text.find('x');
  if (sep == std::string::npos)
    throw bloch::DomainError("--dims must look like <na>x<nb>, e.g. 2x3");
  bloch::CompositeDims dims;
  try {
    dims.na = std::stoi(dims_text.substr(0, sep));
    dims.nb = std::stoi(dims_text.substr(sep + 1));
  } catch (const std::exception&) {
    throw bloch::DomainError("--dims must look like <na>x<nb>, e.g. 2x3");
  }
  const bloch::DensityCandidate rho = read_matrix(matrix_arg);
  const bloch::SeparabilityVerdict verdict = bloch::ppt_verdict(rho, dims, tol);
  std::cout << "decision: " << to_string(verdict.decision) << '\n'
            << "min_margin: " << format_real(verdict.min_margin) << '\n';
  switch (verdict.decision) {
    case bloch::SepDecision::Separable: return 0;
    case bloch::SepDecision::Entangled: return 1;
    case bloch::SepDecision::PptInconclusive: return 2;
  }
  return kExitDomain;
}

int run_sample(int n, int count, const std::string& kind_text, std::uint64_t seed) {
  const bloch::GeneratorBasis basis = bloch::build_generator_basis(n);
  const bloch::SampleKind kind = bloch::sample_kind_from_string(kind_text);
  bloch::Sampler rng(seed);
  for (int i = 0; i < count; ++i)
    std::cout << bloch::vector_to_json(bloch::sample_state(n, kind, rng, basis).components)
              << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-vector toolkit for N-level quantum systems"};
  app.require_subcommand(1);
  const double tol_default = default_tol();

  // generators
  auto* cmd_gen = app.add_subcommand("generators", "Dump the canonical SU(N) generator basis");
  int gen_n = 2;
  bool gen_json = false, gen_csv = false;
  cmd_gen->add_option("--n", gen_n, "level count")->required()->check(CLI::Range(2, 64));
  auto* gen_json_flag = cmd_gen->add_flag("--json", gen_json, "JSON output");
  cmd_gen->add_flag("--csv", gen_csv, "CSV output")->excludes(gen_json_flag);

  // structure-constants
  auto* cmd_sc = app.add_subcommand("structure-constants",
                                     "Dump canonical (i,j,k,f,g) triples as CSV");
  int sc_n = 2;
  cmd_sc->add_option("--n", sc_n, "level count")->required()->check(CLI::Range(2, 16));

  // to-rho
  auto* cmd_rho = app.add_subcommand("to-rho", "Map a Bloch vector to its density matrix");
  int rho_n = 2;
  std::string rho_vector;
  cmd_rho->add_option("--n", rho_n, "level count")->required()->check(CLI::Range(2, 64));
  cmd_rho->add_option("--vector", rho_vector, "JSON array or path to one")->required();

  // to-bloch
  auto* cmd_blochv = app.add_subcommand("to-bloch", "Map a density matrix to its Bloch vector");
  std::string blochv_matrix;
  cmd_blochv->add_option("--matrix", blochv_matrix, "JSON matrix or path to one")->required();

  // check
  auto* cmd_check = app.add_subcommand("check", "Decide Bloch-vector membership");
  int check_n = 2;
  std::string check_vector, check_method = "coeff";
  double check_tol = tol_default;
  bool check_json = false;
  cmd_check->add_option("--n", check_n, "level count")->required()->check(CLI::Range(2, 64));
  cmd_check->add_option("--vector", check_vector, "JSON array or path to one")->required();
  cmd_check->add_option("--tol", check_tol, "verdict band half-width")
      ->check(CLI::PositiveNumber);
  cmd_check->add_option("--method", check_method, "coeff, eigen or both")
      ->check(CLI::IsMember({"coeff", "eigen", "both"}));
  cmd_check->add_flag("--json", check_json, "machine-readable output");

  // section
  auto* cmd_section = app.add_subcommand("section", "Sample a 2-dimensional N=3 section grid");
  int section_i = 1, section_j = 2, section_res = 401;
  std::string section_out, section_boundary_path;
  double section_tol = tol_default;
  cmd_section->add_option("--i", section_i, "first axis")->required()->check(CLI::Range(1, 8));
  cmd_section->add_option("--j", section_j, "second axis")->required()->check(CLI::Range(1, 8));
  cmd_section->add_option("--res", section_res, "grid points per axis")
      ->check(CLI::Range(3, 20001));
  cmd_section->add_option("--out", section_out, "grid CSV path (default stdout)");
  cmd_section->add_option("--emit-boundary", section_boundary_path,
                          "write closed-form boundary polylines to this CSV");
  cmd_section->add_option("--tol", section_tol, "verdict band half-width")
      ->check(CLI::PositiveNumber);

  // ppt
  auto* cmd_ppt = app.add_subcommand("ppt", "Peres-Horodecki partial-transpose test");
  std::string ppt_dims, ppt_matrix;
  double ppt_tol = tol_default;
  cmd_ppt->add_option("--dims", ppt_dims, "composite dimensions, e.g. 2x3")->required();
  cmd_ppt->add_option("--matrix", ppt_matrix, "JSON matrix or path to one")->required();
  cmd_ppt->add_option("--tol", ppt_tol, "verdict band half-width")->check(CLI::PositiveNumber);

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "Emit random Bloch vectors, one per line");
  int sample_n = 2, sample_count = 1;
  std::string sample_kind = "mixed";
  std::uint64_t sample_seed = 0;
  cmd_sample->add_option("--n", sample_n, "level count")->required()->check(CLI::Range(2, 64));
  cmd_sample->add_option("--count", sample_count, "number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("--kind", sample_kind, "pure, mixed or ball-uniform")->required();
  cmd_sample->add_option("--seed", sample_seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_gen)) return run_generators(gen_n, gen_json, gen_csv);
    if (app.got_subcommand(cmd_sc)) return run_structure_constants(sc_n);
    if (app.got_subcommand(cmd_rho)) return run_to_rho(rho_n, rho_vector);
    if (app.got_subcommand(cmd_blochv)) return run_to_bloch(blochv_matrix);
    if (app.got_subcommand(cmd_check))
      return run_check(check_n, check_vector, check_tol, check_method, check_json);
    if (app.got_subcommand(cmd_section))
      return run_section(section_i, section_j, section_res, section_out, section_boundary_path,
                         section_tol);
    if (app.got_subcommand(cmd_ppt)) return run_ppt(ppt_dims, ppt_matrix, ppt_tol);
    if (app.got_subcommand(cmd_sample))
      return run_sample(sample_n, sample_count, sample_kind, sample_seed);
  } catch (const bloch::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
