// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "godisc/cli.hpp"
#include "godisc/dataio.hpp"
#include "godisc/discriminant.hpp"
#include "godisc/eigensolve.hpp"
#include "godisc/error.hpp"
#include "godisc/eval.hpp"
#include "godisc/scatter.hpp"
#include "oracles.hpp"

using namespace godisc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Registry registry() { return Registry::load(std::string(GODISC_TEST_DATA_DIR) + "/registry.txt"); }

LabeledDataset dataset(const std::string& name) { return load_csv(registry().lookup(name)); }

int failures = 0;

void criterion(const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) outcome.require(false, fmt("took %.1f s, budget %.0f s", elapsed, budget_seconds));
  if (!outcome.pass) ++failures;
  std::printf("%s  %-28s  %6.2f s  %s\n", outcome.pass ? "PASS" : "FAIL", name, elapsed, outcome.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion("orthogonality", 10, [] {
    Outcome o;
    double worst = 0;
    for (const auto& name : registry().names()) {
      const auto d = dataset(name);
      const auto m = go_lda(d, std::min<std::size_t>(d.n_features(), 15));
      const double off = oracle::max_offdiag_dot(m.directions);
      worst = std::max(worst, off);
      o.require(off <= 1e-8, name + fmt(": max |u_i.u_j| = %.3g", off));
    }
    if (o.pass) o.detail = fmt("max |u_i.u_j| = %.3g over all registry datasets", worst);
    return o;
  });

  criterion("step-optimality", 120, [] {
    Outcome o;
    const std::size_t dims[] = {3, 4, 5, 4, 5};
    double worst_margin = 1e300;
    for (std::uint64_t i = 0; i < 5; ++i) {
      const auto d = make_blobs(150, dims[i], 3, 1000 + i);
      const auto s = compute_stats(d);
      const auto m = go_lda(s, 3);
      for (Eigen::Index n = 1; n < 3; ++n) {
        const double got = fisher_ratio(m.directions.col(n), s);
        const double best = oracle::random_search_max(s.between, s.within_reg, m.directions.leftCols(n), 100000,
                                                      2000 + 10 * i + static_cast<std::uint64_t>(n));
        const double margin = (got - best) / std::max(got, 1e-300);
        worst_margin = std::min(worst_margin, margin);
        o.require(got >= best * (1 - 1e-3),
                  fmt("seed %.0f n=%.0f: ratio %.6g", static_cast<double>(1000 + i), static_cast<double>(n + 1), got) +
                      fmt(" < random best %.6g", best));
      }
    }
    if (o.pass) o.detail = fmt("smallest relative margin over random search %.3g (slack -1e-3)", worst_margin);
    return o;
  });

  criterion("binary-equivalence", 60, [] {
    Outcome o;
    double worst_cos = 1, worst_d2 = 0;
    for (std::uint64_t seed = 3000; seed < 3005; ++seed) {
      const auto d = make_blobs(120, 6, 2, seed);
      const auto s = compute_stats(d);
      const auto go = go_lda(s, 4);
      const auto fs = foley_sammon(s, 4);
      for (Eigen::Index n = 0; n < 4; ++n) {
        const double c = oracle::abs_cos(go.directions.col(n), fs.directions.col(n));
        worst_cos = std::min(worst_cos, c);
        o.require(c >= 1 - 1e-6, fmt("seed %.0f direction %.0f: |cos| = %.12f", static_cast<double>(seed),
                                     static_cast<double>(n + 1), c));
      }
      const VectorXd closed = oracle::foley_sammon_second(s.within_inv, binary_mean_difference(s));
      const VectorXd d2 = fs.directions.col(1);
      const double gap = std::min((d2 - closed).norm(), (d2 + closed).norm());
      worst_d2 = std::max(worst_d2, gap);
      o.require(gap <= 1e-8, fmt("seed %.0f: d2 differs from closed form by %.3g", static_cast<double>(seed), gap));
    }
    if (o.pass) o.detail = fmt("min |cos| = 1 - %.3g, max d2 gap %.3g", 1 - worst_cos, worst_d2);
    return o;
  });

  criterion("classic-consistency", 60, [] {
    Outcome o;
    std::string counts;
    for (const auto& name : registry().names()) {
      const auto d = dataset(name);
      const auto s = compute_stats(d);
      const auto all = generalized_eig_all(s.between, s);
      const double top = all.front().value;
      const double ratio = fisher_ratio(all.front().vector, s);
      o.require(std::abs(top - ratio) <= 1e-8 * std::abs(top), name + fmt(": lambda1 %.17g vs ratio %.17g", top, ratio));
      std::size_t nonzero = 0;
      for (const auto& p : all) nonzero += p.value > 1e-9 * top ? 1 : 0;
      o.require(nonzero <= d.n_classes() - 1,
                name + fmt(": %.0f eigenvalues above threshold, C-1 = %.0f", static_cast<double>(nonzero),
                           static_cast<double>(d.n_classes() - 1)));
      counts += (counts.empty() ? "" : ", ") + name + "=" + std::to_string(nonzero);
    }
    if (o.pass) o.detail = "nonzero eigenvalues: " + counts;
    return o;
  });

  criterion("gram-schmidt-dominance", 60, [] {
    Outcome o;
    double worst = 1e300;
    for (const std::string name : {"wine", "digits"}) {
      const auto d = dataset(name);
      const auto s = compute_stats(d);
      const auto gs = gram_schmidt_lda(s);
      const auto go = go_lda(s, d.n_classes() - 1);
      for (Eigen::Index n = 0; n < static_cast<Eigen::Index>(d.n_classes() - 1); ++n) {
        const double fu = fisher_ratio(go.directions.col(n), s);
        const double fv = fisher_ratio(gs.directions.col(n), s);
        worst = std::min(worst, fu - fv);
        o.require(fu >= fv - 1e-9, name + fmt(" n=%.0f: %.12g < %.12g", static_cast<double>(n + 1), fu, fv));
      }
    }
    if (o.pass) o.detail = fmt("min fisher(u_n) - fisher(v~_n) = %.3g", worst);
    return o;
  });

  criterion("table1-iris", 60, [] {
    Outcome o;
    const double expected[] = {1.0, 0.8, 0.90, 0.80};
    const auto iris = dataset("iris");
    const auto r = per_direction_accuracy(iris, Method::GOLDA, ClassifierKind::GaussianQuadratic, 4);
    std::string got;
    for (std::size_t n = 0; n < 4; ++n) {
      const double acc = r.per_direction[n] ? r.per_direction[n]->mean : -1;
      got += fmt(n == 0 ? "%.3f" : " %.3f", acc);
      o.require(std::abs(acc - expected[n]) <= 0.1, fmt("direction %.0f: %.3f vs %.2f", static_cast<double>(n + 1), acc, expected[n]));
    }
    const auto classic = per_direction_accuracy(iris, Method::ClassicLDA, ClassifierKind::GaussianQuadratic, 4);
    o.require(!classic.per_direction[2] && !classic.per_direction[3], "classic-lda entries beyond C-1 not N/A");
    if (o.pass) o.detail = "go-lda [" + got + "] vs [1.0 0.8 0.90 0.80]; classic 3rd/4th N/A";
    return o;
  });

  criterion("table1-wine", 60, [] {
    Outcome o;
    const double expected[] = {0.89, 0.86, 0.88};
    const auto wine = dataset("wine");
    const auto r = per_direction_accuracy(wine, Method::GOLDA, ClassifierKind::GaussianQuadratic, 3);
    std::string got;
    for (std::size_t n = 0; n < 3; ++n) {
      const double acc = r.per_direction[n] ? r.per_direction[n]->mean : -1;
      got += fmt(n == 0 ? "%.3f" : " %.3f", acc);
      o.require(std::abs(acc - expected[n]) <= 0.1, fmt("direction %.0f: %.3f vs %.2f", static_cast<double>(n + 1), acc, expected[n]));
    }
    const auto classic = per_direction_accuracy(wine, Method::ClassicLDA, ClassifierKind::GaussianQuadratic, 4);
    o.require(classic.per_direction[0] && classic.per_direction[1] && !classic.per_direction[2] &&
                  !classic.per_direction[3],
              "classic-lda N/A pattern wrong");
    if (o.pass) o.detail = "go-lda [" + got + "] vs [0.89 0.86 0.88]; classic 3rd/4th N/A";
    return o;
  });

  criterion("table2-iris-and-digits", 60, [] {
    Outcome o;
    const auto r = subspace_accuracy(dataset("iris"), Method::GOLDA, ClassifierKind::KNN, {2});
    const double mca = r.subspace.at(2)->mean;
    o.require(std::abs(mca - 0.98) <= 0.05, fmt("iris 1-NN MCA on 2 directions %.3f vs 0.98", mca));
    const auto digits = dataset("digits");
    const auto go = fisher_curve(digits, Method::GOLDA, 10);
    const auto classic = fisher_curve(digits, Method::ClassicLDA, 10);
    o.require(go.fisher_curve.size() == 10 && go.fisher_curve[9] > 0, "go-lda digits curve has no positive index 10");
    o.require(classic.fisher_curve.size() == 9, "classic-lda digits curve does not stop at 9");
    if (o.pass) {
      o.detail = fmt("iris MCA %.3f +/- %.3f; digits go-lda ratio[10] = %.4g, classic stops at 9", mca,
                     r.subspace.at(2)->std, go.fisher_curve[9]);
    }
    return o;
  });

  criterion("monotone-fisher-curve", 60, [] {
    Outcome o;
    for (const auto& name : registry().names()) {
      const auto d = dataset(name);
      const auto r = fisher_curve(d, Method::GOLDA, std::min<std::size_t>(d.n_features(), 15));
      for (std::size_t n = 1; n < r.fisher_curve.size(); ++n) {
        o.require(r.fisher_curve[n] <= r.fisher_curve[n - 1] + 1e-9,
                  name + fmt(": index %.0f rises %.3g", static_cast<double>(n + 1),
                             r.fisher_curve[n] - r.fisher_curve[n - 1]));
      }
    }
    if (o.pass) o.detail = "non-increasing on all registry datasets";
    return o;
  });

  criterion("timing", 300, [] {
    Outcome o;
    const auto features = timing_benchmark(Sweep::FeatureSweep, {50, 200, 800});
    std::string text;
    o.require(features.timing.size() == 3, "feature sweep skipped sizes");
    for (const auto& row : features.timing) {
      const double ratio = row.golda_seconds / row.classic_seconds;
      text += fmt("M=%.0f %.2f, ", static_cast<double>(row.n_features), ratio);
      o.require(ratio <= 2.0, fmt("M=%.0f: go-lda/classic = %.3f", static_cast<double>(row.n_features), ratio));
    }
    const auto samples = timing_benchmark(Sweep::SampleSweep, {1000000});
    o.require(samples.timing.size() == 1, "sample sweep skipped N=1e6");
    if (!samples.timing.empty()) {
      const double ratio = samples.timing[0].golda_seconds / samples.timing[0].classic_seconds;
      text += fmt("N=1e6 %.3f", ratio);
      o.require(ratio >= 0.8 && ratio <= 1.25, fmt("N=1e6: go-lda/classic = %.3f", ratio));
    }
    if (o.pass) o.detail = "go-lda/classic ratios: " + text;
    return o;
  });

  criterion("determinism", 120, [] {
    Outcome o;
    const auto run = [](const std::vector<std::string>& args) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      return std::make_pair(code, out.str());
    };
    const auto fitted = run({"fit", "--dataset", "wine", "--k", "8"});
    {
      std::ofstream f(std::filesystem::temp_directory_path() / "godisc_acceptance_model.json");
      f << fitted.second;
    }
    const std::string model_path = (std::filesystem::temp_directory_path() / "godisc_acceptance_model.json").string();
    const std::vector<std::vector<std::string>> commands{
        {"fit", "--dataset", "wine", "--method", "go-lda", "--k", "8"},
        {"fit", "--dataset", "digits", "--method", "classic-lda"},
        {"project", "--model", model_path, "--dataset", "wine"},
        {"fisher-curve", "--dataset", "digits", "--method", "go-lda", "--k", "20"},
        {"per-direction", "--dataset", "wine", "--method", "go-lda", "--classifier", "quadratic", "--k", "10",
         "--folds", "10", "--seed", "42", "--format", "json"},
        {"subspace", "--dataset", "iris", "--method", "go-lda", "--classifier", "knn", "--l", "1,2,3",
         "--format", "json"},
        {"scatter", "--dataset", "wine", "--method", "go-lda", "--dims", "4,5", "--format", "json"},
    };
    for (const auto& cmd : commands) {
      const auto a = run(cmd);
      const auto b = run(cmd);
      o.require(a.first == 0 && b.first == 0, cmd[0] + " failed");
      o.require(a.second == b.second, cmd[0] + " output differs between runs");
    }
    const std::vector<std::string> timing{"timing", "--sweep", "features", "--sizes", "20,40", "--repeats", "1"};
    const auto ta = nlohmann::json::parse(run(timing).second);
    const auto tb = nlohmann::json::parse(run(timing).second);
    auto strip = [](nlohmann::json doc) {
      for (auto& row : doc["timing"]["rows"]) {
        row.erase("classic_lda_seconds");
        row.erase("go_lda_seconds");
      }
      return doc.dump();
    };
    o.require(strip(ta) == strip(tb), "timing report structure differs between runs");
    if (o.pass) {
      o.detail = std::to_string(commands.size()) +
                 " commands byte-identical; timing identical apart from measured seconds";
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
