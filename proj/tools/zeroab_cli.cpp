#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include "zeroab/cli/run.hpp"

using namespace zeroab;
using cli::json;

namespace {

int emit(const json &doc, const std::string &out_path, int code) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return code;
}

json error_doc(const std::string &command, const std::string &kind, const std::string &message) {
  return {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in proj Z and proj Lambda_m"};
  std::string command, in_path, out_path, ring;
  std::uint64_t seed = 0;
  bool show_statement = false;

  std::string names;
  for (const auto &c : cli::commands()) names += std::string(names.empty() ? "" : ", ") + std::string(c.name);
  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("--in", in_path, "request file (default: stdin)");
  app.add_option("--out", out_path, "response file (default: stdout)");
  auto *ring_opt = app.add_option("--ring", ring, "ring shorthand: z, tri:m=3:f=q, tri:m=4:f=p5");
  auto *seed_opt = app.add_option("--seed", seed, "seed for check suites");
  app.add_flag("--paper-ref", show_statement, "print the statement the command implements and exit");
  CLI11_PARSE(app, argc, argv);

  const cli::CommandInfo *info = cli::find_command(command);
  if (!info) return emit(error_doc(command, "Validation", "unknown command '" + command + "'"), out_path, 2);
  if (show_statement) {
    return emit({{"command", command}, {"summary", info->summary}, {"statement", info->statement}}, out_path, 0);
  }

  std::string text;
  if (in_path.empty() || in_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(in_path);
    if (!in) return emit(error_doc(command, "Validation", "cannot read " + in_path), out_path, 2);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  json request;
  try {
    request = json::parse(text);
  } catch (const json::parse_error &e) {
    return emit(error_doc(command, "Validation", e.what()), out_path, 2);
  }
  if (!request.is_object()) return emit(error_doc(command, "Validation", "request: expected an object"), out_path, 2);

  if (*ring_opt) {
    if (request.contains("ring")) {
      try {
        const auto a = io::ring_from_json(request.at("ring"));
        const auto b = RingConfig::parse_shorthand(ring);
        if (a.shorthand() != b.shorthand())
          return emit(error_doc(command, "Validation", "--ring disagrees with the request's ring"), out_path, 2);
      } catch (const Error &e) {
        return emit(error_doc(command, std::string(to_string(e.kind())), e.what()), out_path, 2);
      }
    }
    request["ring"] = ring;
  }
  if (*seed_opt) request["options"]["seed"] = seed;

  const cli::Response r = cli::run(command, request);
  return emit(r.document, out_path, r.exit_code);
}
