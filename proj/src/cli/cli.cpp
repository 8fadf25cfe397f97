#include "dispersion/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "dispersion/certify.hpp"
#include "dispersion/dispatch.hpp"
#include "dispersion/gadget.hpp"
#include "dispersion/metric.hpp"
#include "dispersion/oracle.hpp"

namespace dispersion::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

Rational parse_delta(const std::string& text) {
  auto delta = Rational::parse(text);
  if (!delta || *delta <= Rational(0)) {
    throw UsageError("--delta must be a positive integer or fraction a/b, got '" + text + "'");
  }
  return *delta;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

OracleOptions oracle_options(std::size_t cap, const std::optional<double>& timeout_s) {
  OracleOptions opts;
  opts.candidate_cap = cap;
  if (timeout_s) {
    if (*timeout_s <= 0) throw UsageError("--timeout must be positive");
    opts.timeout = std::chrono::milliseconds(static_cast<long long>(*timeout_s * 1000.0));
  }
  return opts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dispersion numbers of unit-edge graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string delta_text;
  std::string witness_path;
  std::string certificate_path;
  std::string gadget_prefix;
  std::string out_path;
  bool brute_force = false;
  std::size_t cap = OracleOptions{}.candidate_cap;
  std::optional<double> timeout_s;
  std::uint32_t factor = 1;

  auto* solve = app.add_subcommand("solve", "dispersion number with a verified witness");
  solve->add_option("graph", graph_path, "graph file")->required();
  solve->add_option("--delta", delta_text, "a/b")->required();
  solve->add_option("--witness", witness_path, "write the witness here");
  solve->add_option("--certificate", certificate_path, "write the extracted certificate here");
  solve->add_flag("--brute-force", brute_force, "allow the exact oracle for numerators >= 3");
  solve->add_option("--cap", cap, "oracle candidate cap");
  solve->add_option("--timeout", timeout_s, "oracle time limit in seconds");

  auto* oracle = app.add_subcommand("oracle", "brute-force dispersion number and witness");
  oracle->add_option("graph", graph_path, "graph file")->required();
  oracle->add_option("--delta", delta_text, "a/b")->required();
  oracle->add_option("--cap", cap, "candidate cap");
  oracle->add_option("--timeout", timeout_s, "time limit in seconds");
  oracle->add_option("--witness", witness_path, "write the witness here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check a dispersion certificate");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("--delta", delta_text, "a/b")->required();
  verify->add_option("--certificate", certificate_path, "certificate file")->required();

  auto* gadget = app.add_subcommand("gadget", "hardness gadget for a cubic graph");
  gadget->add_option("graph", graph_path, "cubic graph file")->required();
  gadget->add_option("--delta", delta_text, "a/b with a >= 3")->required();
  gadget->add_option("--out", gadget_prefix, "output prefix (writes <prefix>.graph and <prefix>.map)")
      ->default_val("gadget");

  auto* sub = app.add_subcommand("subdivide", "c-subdivision of a graph");
  sub->add_option("graph", graph_path, "graph file")->required();
  sub->add_option("--factor", factor, "c >= 1")->required()->check(CLI::PositiveNumber);
  sub->add_option("--out", out_path, "write here instead of stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    const Graph g = load_graph(graph_path);

    if (solve->parsed()) {
      SolveOptions opts;
      opts.allow_bruteforce = brute_force;
      opts.oracle = oracle_options(cap, timeout_s);
      const DispersionResult r = disp(g, parse_delta(delta_text), opts);
      out << r.value << '\n';
      if (!witness_path.empty()) {
        auto f = open_output(witness_path);
        write_witness(f, g, r.witness.points);
      }
      if (!certificate_path.empty()) {
        auto f = open_output(certificate_path);
        write_certificate(f, extract_certificate(g, r.witness.points), static_cast<std::int64_t>(r.value));
      }
      return kSuccess;
    }

    if (oracle->parsed()) {
      const OracleResult r = brute_disp(g, parse_delta(delta_text), oracle_options(cap, timeout_s));
      out << r.value << '\n';
      if (witness_path.empty()) {
        write_witness(out, g, r.witness.points);
      } else {
        auto f = open_output(witness_path);
        write_witness(f, g, r.witness.points);
      }
      return kSuccess;
    }

    if (verify->parsed()) {
      std::ifstream in(certificate_path);
      if (!in) throw UsageError("cannot open " + certificate_path);
      const CertificateFile file = parse_certificate(in);
      const Verdict v = verify_certificate(g, parse_delta(delta_text), file.certificate, file.k);
      if (v.accepted) {
        out << "accept\n";
        return kSuccess;
      }
      out << "reject: " << reject_reason_name(v.reason) << " (" << v.detail << ")\n";
      return kRejected;
    }

    if (gadget->parsed()) {
      const GadgetInstance inst = build_gadget(g, parse_delta(delta_text));
      {
        auto f = open_output(gadget_prefix + ".graph");
        write_graph(f, inst.g);
      }
      {
        auto f = open_output(gadget_prefix + ".map");
        write_gadget_map(f, inst);
      }
      const auto& c = inst.coeffs;
      out << "x1=" << c.x1 << " y1=" << c.y1 << " x2=" << c.x2 << " y2=" << c.y2 << '\n';
      out << "vertices=" << inst.g.vertex_count() << " edges=" << inst.g.edge_count() << '\n';
      out << "bound = k + (2*" << c.y1 << " + " << c.y2 << ")*" << inst.h_edge_count() << " = k + "
          << predicted_bound(inst, 0) << '\n';
      return kSuccess;
    }

    const Subdivision s = subdivide(g, factor);
    if (out_path.empty()) {
      write_graph(out, s.graph());
    } else {
      auto f = open_output(out_path);
      write_graph(f, s.graph());
    }
    return kSuccess;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const SearchTimeout& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dispersion::cli
