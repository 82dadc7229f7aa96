#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bott/autgroup.hpp"
#include "bott/census.hpp"
#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/json_io.hpp"
#include "bott/oracle.hpp"
#include "bott/verify.hpp"

namespace bott::cli {
namespace {

using Json = nlohmann::json;
namespace bj = bott::json;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  bool require_q_trivial = false;
  bool witness = false;
  bool enumerate = false;
  std::optional<int> bound;
  std::optional<int> box;
  std::optional<int> n;
  std::string partition;
  std::string suite;
  std::uint64_t max_enumeration = kDefaultMaxEnumeration;
  unsigned threads = 0;
};

std::string read_input(const std::string& source, std::istream& in) {
  if (source == "-") return {std::istreambuf_iterator<char>(in), {}};
  if (!source.empty() && source.front() == '{') return source;
  std::ifstream file(source);
  if (!file) throw InputError("cannot read input '" + source + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

BottMatrix load_matrix(const std::string& source, std::istream& in) {
  const Json doc = bj::parse(read_input(source, in));
  // Census records wrap the matrix; accept either shape.
  return bj::to_matrix(doc.contains("matrix") ? doc.at("matrix") : doc);
}

Partition parse_partition(const std::string& text) {
  if (!text.empty() && text.front() == '{') return bj::to_partition(bj::parse(text));
  std::vector<int> parts;
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("field 'partition': '" + tok + "' is not an integer");
    }
  }
  return Partition(std::move(parts));
}

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write output '" + path + "'");
      out_ = &file_;
    }
  }
  void emit(const Json& j) { *out_ << j.dump() << '\n'; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const BottRing ring(load_matrix(o.inputs.empty() ? "-" : o.inputs.front(), in));
  const auto report = classify(ring);
  Emitter(o.output, out).emit(bj::from_report(report));
  return (o.require_q_trivial && !report.q_trivial) ? kDomainError : kOk;
}

int cmd_iso(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.inputs.size() != 2) throw InputError("iso needs exactly two inputs");
  const BottRing a(load_matrix(o.inputs[0], in));
  const BottRing b(load_matrix(o.inputs[1], in));
  for (const auto* r : {&a, &b})
    if (!is_q_trivial(*r)) {
      err << "iso: input " << (r == &a ? "A" : "B") << " is not Q-trivial\n";
      return kDomainError;
    }
  const bool iso = is_isomorphic(a, b);
  Json report{{"isomorphic", iso},
              {"partition_a", bj::from_partition(partition_invariant(a))},
              {"partition_b", bj::from_partition(partition_invariant(b))}};
  if (o.witness) {
    if (a.n() > 3) {
      err << "iso: --witness is only available for n <= 3\n";
    } else if (iso && a.n() == b.n()) {
      const int bound = o.bound.value_or(3);
      if (auto w = brute_iso_search(a, b, bound))
        report["witness"] = {{"matrix", bj::from_int_matrix(w->matrix)}, {"bound", bound}};
      else
        report["witness"] = {{"matrix", nullptr}, {"bound", bound}};
    }
  }
  Emitter(o.output, out).emit(report);
  return kOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (!o.n || !o.bound) throw InputError("census needs --n and --bound");
  if (o.output.empty()) throw InputError("census needs --output for the record file");
  // Check the guard before creating the file.
  census_size(*o.n, *o.bound, o.max_enumeration);
  std::ofstream records(o.output);
  if (!records) throw InputError("cannot write output '" + o.output + "'");
  const auto summary = run_census(
      *o.n, *o.bound, [&](const CensusRecord& r) { records << bj::from_census_record(r).dump() << '\n'; },
      o.max_enumeration, o.threads);
  records.close();
  if (!records) throw InputError("error writing '" + o.output + "'");
  Json s = bj::from_census_summary(summary);
  s["records"] = o.output;
  out << s.dump() << '\n';
  return kOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  if (o.partition.empty() && !o.n) throw InputError("aut needs --partition or --n");
  const Partition p = o.partition.empty() ? Partition({*o.n}) : parse_partition(o.partition);
  Json report{{"partition", bj::from_partition(p)}, {"order", aut_order(p)}};
  if (o.enumerate) {
    Json elems = Json::array();
    if (p.length() == 1) {
      for (const auto& e : enumerate_automorphisms(p.n(), o.max_enumeration)) elems.push_back(bj::from_aut(e));
    } else {
      for (const auto& e : enumerate_block_automorphisms(p, o.max_enumeration)) elems.push_back(bj::from_block_aut(e));
    }
    report["elements"] = std::move(elems);
  }
  Emitter(o.output, out).emit(report);
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  VerifyOptions v;
  if (o.n) v.max_n = *o.n;
  if (o.bound) v.entry_bound = *o.bound;
  v.box = o.box;
  v.max_enumeration = o.max_enumeration;
  if (!o.inputs.empty()) v.matrix = load_matrix(o.inputs.front(), in);
  const auto report = run_verification(o.suite, v);
  Emitter(o.output, out).emit(report.to_json());
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_partitions(const Options& o, std::ostream& out) {
  if (!o.n) throw InputError("partitions needs --n");
  Json list = Json::array();
  const auto parts = partitions_of(*o.n);
  for (const auto& p : parts) list.push_back(p.parts());
  Emitter(o.output, out).emit({{"n", *o.n}, {"count", parts.size()}, {"partitions", std::move(list)}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral cohomology of Bott manifolds: Q-triviality, classification, automorphisms"};
  app.require_subcommand(1);
  Options o;
  bool json_flag = true;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write JSON here instead of stdout");
    sub->add_flag("--json", json_flag, "Emit JSON (the only format)");
    sub->add_option("--max-enumeration", o.max_enumeration, "Cap on enumerated candidates")->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify one Bott matrix");
  classify_cmd->add_option("-i,--input,input", o.inputs, "Matrix file, inline JSON, or - for stdin");
  classify_cmd->add_flag("--require-q-trivial", o.require_q_trivial, "Exit 2 when the ring is not Q-trivial");
  add_common(classify_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Decide whether two Q-trivial rings are isomorphic");
  iso_cmd->add_option("-i,--input,inputs", o.inputs, "Two matrices (files, inline JSON, or -)");
  iso_cmd->add_flag("--witness", o.witness, "Attach an explicit isomorphism found by search (n <= 3)");
  iso_cmd->add_option("--bound", o.bound, "Entry bound for the witness search (default 3)");
  add_common(iso_cmd);

  auto* census_cmd = app.add_subcommand("census", "Classify every matrix with entries in [-bound, bound]");
  census_cmd->add_option("--n", o.n, "Tower height")->required();
  census_cmd->add_option("--bound", o.bound, "Entry bound")->required();
  census_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  add_common(census_cmd);

  auto* aut_cmd = app.add_subcommand("aut", "Order (and elements) of Aut H*(H_lambda)");
  aut_cmd->add_option("--partition,partition", o.partition, "Partition, e.g. 2,2 or [3,1]");
  aut_cmd->add_option("--n", o.n, "Shorthand for the partition (n)");
  aut_cmd->add_flag("--enumerate", o.enumerate, "List every automorphism");
  add_common(aut_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run an oracle verification suite");
  verify_cmd->add_option("suite", o.suite, "Suite name")->required();
  verify_cmd->add_option("--n", o.n, "Largest tower height in the family (default 3)");
  verify_cmd->add_option("--bound", o.bound, "Entry bound of the family (default 1)");
  verify_cmd->add_option("--box", o.box, "Oracle coefficient bound");
  verify_cmd->add_option("-i,--input", o.inputs, "Verify a single matrix instead of a family");
  add_common(verify_cmd);

  auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of n");
  partitions_cmd->add_option("--n", o.n, "n")->required();
  add_common(partitions_cmd);

  std::vector<std::string> argv_store{"bott"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, in, out);
    if (*iso_cmd) return cmd_iso(o, in, out, err);
    if (*census_cmd) return cmd_census(o, out);
    if (*aut_cmd) return cmd_aut(o, out);
    if (*verify_cmd) return cmd_verify(o, in, out);
    if (*partitions_cmd) return cmd_partitions(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace bott::cli
