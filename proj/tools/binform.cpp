#include <CLI11.hpp>

#include <iostream>

#include "binform/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Factorization, symmetries and Hamiltonian fields of real binary forms"};
  app.set_help_all_flag("--help-all");

  binform::CommandRequest req;
  std::string tol, eps, window, res, seeds, out, format, time;

  std::string commands;
  for (const auto& name : binform::command_names()) commands += (commands.empty() ? "" : "|") + name;
  app.add_option("command", req.command, commands)->required();
  app.add_option("polynomial", req.polynomial, "homogeneous polynomial in x and y, e.g. \"x*y^2\"")->required();
  app.add_option("--tol", tol, "symmetry residual tolerance, or flow tolerance for portrait/dynamics");
  app.add_option("--eps", eps, "root enclosure width (default 1e-14, env BINFORM_PRECISION)");
  app.add_option("--window", window, "plot window X0,Y0,X1,Y1");
  app.add_option("--res", res, "level-set grid resolution");
  app.add_option("--seeds", seeds, "CSV file with header x,y");
  app.add_option("--out", out, "output file");
  app.add_option("--format", format, "json|csv|svg");
  app.add_option("--time", time, "integration time (dynamics) or time budget (portrait)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto set = [&req](const char* key, const std::string& value) {
    if (!value.empty()) req.options[key] = value;
  };
  set("tol", tol);
  set("eps", eps);
  set("window", window);
  set("res", res);
  set("seeds", seeds);
  set("out", out);
  set("format", format);
  set("time", time);

  const binform::CommandResult result = binform::run(req);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
