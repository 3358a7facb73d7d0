#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropical/error.hpp"
#include "tropical/fixtures.hpp"
#include "tropical/io.hpp"
#include "tropical/svg.hpp"

using namespace tropical;

namespace {

WeightedComplex load_complex(const std::string& path) {
  WeightedComplex c = io::complex_from_json(io::read_json(path));
  const auto violations = validate(c);
  if (!violations.empty())
    throw TropicalError(ErrorKind::InvalidArgument, path + ": " + violations.front().message);
  return c;
}

const WeightedComplex* load_optional(const std::string& path, WeightedComplex& storage) {
  if (path.empty()) return nullptr;
  storage = load_complex(path);
  return &storage;
}

RationalVector point_arg(const std::string& text, std::size_t n) {
  RationalVector w = io::parse_point(text);
  if (w.size() != n) throw io::ParseError("point has " + std::to_string(w.size()) + " coordinates, expected " + std::to_string(n));
  return w;
}

void emit(const io::Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    io::write_text(out, text);
}

Window window_arg(const std::string& text) {
  try {
    return parse_window(text);
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(std::string("--window: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical intersection theory"};
  app.require_subcommand(1);
  int status = 0;

  std::string poly, out, svg, window = "-3,3,-3,3";
  auto* trop = app.add_subcommand("tropicalize", "Tropical hypersurface of a valued Laurent polynomial");
  trop->add_option("--poly", poly)->required();
  trop->add_option("--out", out);
  trop->add_option("--svg", svg);
  trop->add_option("--window", window);
  trop->callback([&] {
    const WeightedComplex c = tropicalize(io::poly_from_json(io::read_json(poly)));
    emit(io::to_json(c), out);
    if (!svg.empty()) io::write_text(svg, render_svg(c, window_arg(window)));
  });

  std::string complex, point;
  auto* star_cmd = app.add_subcommand("star", "Star of a complex at a point");
  star_cmd->add_option("--complex", complex)->required();
  star_cmd->add_option("--point", point)->required();
  star_cmd->add_option("--out", out);
  star_cmd->callback([&] {
    const WeightedComplex c = load_complex(complex);
    emit(io::to_json(star(c, point_arg(point, c.ambient_dim()))), out);
  });

  auto* balance = app.add_subcommand("balance", "Check the balancing condition");
  balance->add_option("--complex", complex)->required();
  balance->callback([&] {
    const auto violations = check_balancing(load_complex(complex));
    std::cout << io::to_json(violations).dump(2) << "\n";
    status = violations.empty() ? 0 : 1;
  });

  std::string a, b, ambient;
  std::size_t choice = 0;
  auto* stable = app.add_subcommand("stable", "Stable intersection of two complexes");
  stable->add_option("--a", a)->required();
  stable->add_option("--b", b)->required();
  stable->add_option("--ambient", ambient);
  stable->add_option("--out", out);
  stable->add_option("--choice", choice, "Which certified displacement vector to use");
  stable->callback([&] {
    WeightedComplex y;
    StableOptions options;
    options.displacement_choice = choice;
    options.ambient = load_optional(ambient, y);
    emit(io::to_json(stable_intersection(load_complex(a), load_complex(b), options)), out);
  });

  std::vector<std::string> complexes;
  auto* multi = app.add_subcommand("multi-stable", "Stable intersection of several complexes via the diagonal");
  multi->add_option("--complexes", complexes)->required()->expected(2, -1);
  multi->add_option("--out", out);
  multi->add_option("--choice", choice);
  multi->callback([&] {
    std::vector<WeightedComplex> cs;
    for (const auto& path : complexes) cs.push_back(load_complex(path));
    emit(io::to_json(stable_intersection_multi(cs, choice)), out);
  });

  std::string polytopes;
  auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume of n polytopes in R^n");
  mixedvol->add_option("--polytopes", polytopes)->required();
  mixedvol->callback([&] { std::cout << to_string(mixed_volume(io::polytopes_from_json(io::read_json(polytopes)))) << "\n"; });

  std::vector<std::string> polys;
  auto* cicount = app.add_subcommand("cicount", "Intersection multiplicity of n hypersurfaces at an isolated point");
  cicount->add_option("--polys", polys)->required()->expected(1, -1);
  cicount->add_option("--point", point)->required();
  cicount->callback([&] {
    std::vector<ValuedLaurentPoly> fs;
    for (const auto& path : polys) fs.push_back(io::poly_from_json(io::read_json(path)));
    std::cout << complete_intersection_count(fs, point_arg(point, fs.front().ambient_dim())).get_str() << "\n";
  });

  auto* liftcheck = app.add_subcommand("liftcheck", "Properness, simplicity and lifting verdict at a point");
  liftcheck->add_option("--a", a)->required();
  liftcheck->add_option("--b", b)->required();
  liftcheck->add_option("--ambient", ambient);
  liftcheck->add_option("--point", point)->required();
  liftcheck->callback([&] {
    WeightedComplex y;
    const WeightedComplex* amb = load_optional(ambient, y);
    const WeightedComplex ca = load_complex(a), cb = load_complex(b);
    std::cout << io::to_json(lifting_report(ca, cb, point_arg(point, ca.ambient_dim()), amb)).dump(2) << "\n";
  });

  auto* render = app.add_subcommand("render", "Draw planar complexes as SVG");
  render->add_option("--complex", complexes)->required()->expected(1, -1);
  render->add_option("--svg", svg);
  render->add_option("--window", window);
  render->callback([&] {
    std::vector<WeightedComplex> layers;
    for (const auto& path : complexes) layers.push_back(load_complex(path));
    const std::string doc = render_svg(layers, window_arg(window));
    if (svg.empty())
      std::cout << doc;
    else
      io::write_text(svg, doc);
  });

  std::string id = "all";
  auto* examples = app.add_subcommand("examples", "Run the built-in worked examples");
  examples->add_option("--id", id, "Example id or 'all'");
  examples->callback([&] {
    std::vector<std::string> ids = id == "all" ? fixtures::example_ids() : std::vector<std::string>{id};
    for (const auto& e : ids) {
      const auto r = fixtures::run_example(e);
      std::cout << r.id << ": " << (r.matches ? "MATCH" : "MISMATCH") << "\n  expected " << r.expected << "\n  computed "
                << r.computed << "\n";
      if (!r.matches) status = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TropicalError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return status;
}
