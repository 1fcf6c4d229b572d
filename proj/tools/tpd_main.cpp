#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "tpd/geometry.hpp"
#include "tpd/io.hpp"
#include "tpd/means.hpp"
#include "tpd/oracle.hpp"
#include "tpd/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // not PD / not Hermitian / bad input tensor
constexpr int kExitIo = 2;      // parse, I/O, bad flags

// Locale-independent, 12 significant digits.
std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_complex(tpd::Complex v) {
  if (std::abs(v.imag()) <= 1e-10 * std::max(1.0, std::abs(v))) {
    return format_real(v.real());
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

void apply_thread_cap() {
  if (const char* env = std::getenv("TPD_THREADS")) {
    const int threads = std::atoi(env);
    if (threads > 0) {
      Eigen::setNbThreads(threads);
    }
  }
}

int cmd_check(const std::string& file) {
  const tpd::Tensor3 t = tpd::read_tensor_json(file);
  if (!t.is_frontal_square()) {
    std::cout << "verdict: NotFrontalSquare\n";
    return kExitDomain;
  }
  const tpd::TpdCertificate cert = tpd::check_tpd(t);
  std::cout << "verdict: " << tpd::to_string(cert.verdict) << "\n"
            << "lambda_min: " << format_real(cert.lambda_min) << "\n"
            << "lambda_max: " << format_real(cert.lambda_max) << "\n"
            << "hermitian_residual: " << format_real(cert.hermitian_residual) << "\n";
  return cert.positive_definite() ? kExitOk : kExitDomain;
}

int cmd_gmean(const std::string& file_a, const std::string& file_b, const std::string& out,
              const std::string& path_name, double t) {
  const tpd::Tensor3 a = tpd::read_tensor_json(file_a);
  const tpd::Tensor3 b = tpd::read_tensor_json(file_b);
  const tpd::MeanPath path =
      path_name == "dense" ? tpd::MeanPath::DenseOracle : tpd::MeanPath::FourierBlocks;
  try {
    if (t == 0.5) {
      const tpd::MeanResult result = tpd::geometric_mean(a, b, path);
      tpd::write_tensor_json(out, result.mean);
      std::cout << "riccati_residual: " << format_real(result.riccati_residual) << "\n";
    } else {
      // Off-midpoint samples evaluate per Fourier block regardless of --path.
      tpd::write_tensor_json(out, tpd::weighted_geometric_mean(a, b, t));
    }
  } catch (const tpd::NotTPD& e) {
    const std::string file = e.which == "a" ? file_a : file_b;
    std::cerr << "error: '" << file << "' is not T-positive definite\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_dist(const std::string& file_a, const std::string& file_b) {
  const tpd::Tensor3 a = tpd::read_tensor_json(file_a);
  const tpd::Tensor3 b = tpd::read_tensor_json(file_b);
  std::cout << format_real(tpd::distance(a, b)) << "\n";
  return kExitOk;
}

int cmd_eig(const std::string& file) {
  const tpd::Tensor3 t = tpd::read_tensor_json(file);
  std::vector<tpd::Complex> values = tpd::t_eigenvalues(t);
  std::sort(values.begin(), values.end(), [](tpd::Complex x, tpd::Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  for (size_t i = 0; i < values.size(); ++i) {
    std::cout << (i ? " " : "") << format_complex(values[i]);
  }
  std::cout << "\n";
  return kExitOk;
}

struct BenchRecord {
  tpd::Index n = 0, p = 0;
  tpd::MeanPath path = tpd::MeanPath::FourierBlocks;
  double wall_time_s = 0.0;
  double rel_agreement = std::numeric_limits<double>::quiet_NaN();
  int repetitions = 0;
};

void write_record(std::ostream& csv, const BenchRecord& r) {
  csv << r.n << "," << r.p << "," << tpd::to_string(r.path) << "," << format_real(r.wall_time_s)
      << "," << format_real(r.rel_agreement) << "," << r.repetitions << "\n";
}

// T-PD sample with per-block structure M M^H + I; rejection-free.
tpd::Tensor3 random_tpd(tpd::Index n, tpd::Index p, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  tpd::BlockSpectrum s{n, p, {}};
  s.blocks.reserve(static_cast<size_t>(p));
  for (tpd::Index i = 0; i < p; ++i) {
    tpd::Matrix m(n, n);
    for (tpd::Index r = 0; r < n; ++r) {
      for (tpd::Index c = 0; c < n; ++c) {
        m(r, c) = tpd::Complex(gauss(rng), gauss(rng));
      }
    }
    s.blocks.push_back(m * m.adjoint() + tpd::Matrix::Identity(n, n));
  }
  return tpd::from_spectrum(s);
}

int cmd_bench(const std::vector<int>& n_list, const std::vector<int>& p_list, int reps,
              const std::string& csv_path, unsigned long long seed, bool force_dense) {
  std::ofstream csv(csv_path);
  if (!csv) {
    std::cerr << "error: cannot open '" << csv_path << "' for writing\n";
    return kExitIo;
  }
  csv << "n,p,path,wall_time_s,rel_agreement,repetitions\n";

  using clock = std::chrono::steady_clock;
  for (int n : n_list) {
    for (int p : p_list) {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1000003ULL * n + p);
      const tpd::Tensor3 a = random_tpd(n, p, rng);
      const tpd::Tensor3 b = random_tpd(n, p, rng);
      const bool run_dense = force_dense || static_cast<tpd::Index>(n) * p <= tpd::kOracleSizeCap;

      double blocks_time = 0.0, dense_time = 0.0;
      tpd::Tensor3 blocks_mean, dense_mean;
      blocks_time = std::numeric_limits<double>::infinity();
      for (int r = 0; r < reps; ++r) {
        const auto start = clock::now();
        tpd::MeanResult result = tpd::geometric_mean(a, b, tpd::MeanPath::FourierBlocks);
        const std::chrono::duration<double> elapsed = clock::now() - start;
        blocks_time = std::min(blocks_time, elapsed.count());
        blocks_mean = std::move(result.mean);
      }
      if (run_dense) {
        dense_time = std::numeric_limits<double>::infinity();
        for (int r = 0; r < reps; ++r) {
          const auto start = clock::now();
          tpd::MeanResult result =
              tpd::geometric_mean(a, b, tpd::MeanPath::DenseOracle, force_dense);
          const std::chrono::duration<double> elapsed = clock::now() - start;
          dense_time = std::min(dense_time, elapsed.count());
          dense_mean = std::move(result.mean);
        }
      }

      double rel_agreement = std::numeric_limits<double>::quiet_NaN();
      if (run_dense) {
        rel_agreement = tpd::frobenius_norm(blocks_mean - dense_mean) /
                        std::max(1.0, tpd::frobenius_norm(dense_mean));
      }
      write_record(csv, BenchRecord{n, p, tpd::MeanPath::FourierBlocks, blocks_time,
                                    rel_agreement, reps});
      if (run_dense) {
        write_record(csv, BenchRecord{n, p, tpd::MeanPath::DenseOracle, dense_time,
                                      rel_agreement, reps});
      }
    }
  }
  if (!csv) {
    std::cerr << "error: failed writing '" << csv_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"T-product tensor toolkit: positive definiteness, geometric means and "
               "Riemannian geometry of third-order tensors"};
  app.require_subcommand(1);

  std::string file_a, file_b, out_path, path_name = "blocks", csv_path;
  double t_param = 0.5;
  std::vector<int> n_list, p_list;
  int reps = 1;
  unsigned long long seed = 1;
  bool force_dense = false;

  CLI::App* check = app.add_subcommand("check", "Certify T-positive definiteness of a tensor");
  check->add_option("file", file_a, "tensor JSON file")->required();

  CLI::App* gmean =
      app.add_subcommand("gmean", "Geometric mean (or geodesic point) of two T-PD tensors");
  gmean->add_option("file_a", file_a, "first tensor")->required();
  gmean->add_option("file_b", file_b, "second tensor")->required();
  gmean->add_option("--out", out_path, "output tensor file")->required();
  gmean->add_option("--path", path_name, "computation path")
      ->check(CLI::IsMember({"blocks", "dense"}));
  gmean->add_option("--t", t_param, "geodesic parameter in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));

  CLI::App* dist = app.add_subcommand("dist", "Riemannian distance between two T-PD tensors");
  dist->add_option("file_a", file_a, "first tensor")->required();
  dist->add_option("file_b", file_b, "second tensor")->required();

  CLI::App* eig = app.add_subcommand("eig", "Sorted T-eigenvalues of a frontal-square tensor");
  eig->add_option("file", file_a, "tensor JSON file")->required();

  CLI::App* bench =
      app.add_subcommand("bench", "Time the FourierBlocks and DenseOracle mean paths");
  bench->add_option("--n-list", n_list, "slice sizes")->delimiter(',');
  bench->add_option("--p-list", p_list, "slice counts")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per measurement")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "output CSV file")->required();
  bench->add_option("--seed", seed, "input generator seed");
  bench->add_flag("--force-dense", force_dense, "run the dense path above the size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitIo;
  }

  try {
    if (check->parsed()) return cmd_check(file_a);
    if (gmean->parsed()) return cmd_gmean(file_a, file_b, out_path, path_name, t_param);
    if (dist->parsed()) return cmd_dist(file_a, file_b);
    if (eig->parsed()) return cmd_eig(file_a);
    if (bench->parsed()) {
      for (int v : n_list) {
        if (v <= 0) {
          std::cerr << "error: --n-list values must be positive\n";
          return kExitIo;
        }
      }
      for (int v : p_list) {
        if (v <= 0) {
          std::cerr << "error: --p-list values must be positive\n";
          return kExitIo;
        }
      }
      return cmd_bench(n_list, p_list, reps, csv_path, seed, force_dense);
    }
  } catch (const tpd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const tpd::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const tpd::NotTPD& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const tpd::NotTHermitian& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const tpd::NotFrontalSquare& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const tpd::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
