// Writes the canonical spec files under data/ from the in-memory fixtures.
#include <fstream>
#include <iostream>

#include "gluing/fixtures.hpp"
#include "gluing/spec_io.hpp"

namespace fx = gluing::fixtures;

namespace {

bool write(const std::string& dir, const std::string& name, const gluing::SpecDocument& doc) {
  std::ofstream out(dir + "/" + name);
  out << gluing::serialize(doc);
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixture_files OUTPUT_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  bool ok = true;

  gluing::SpecDocument circ;
  gluing::GluingData gd = fx::circ();
  circ.add_gluing(gd);
  gluing::Cone to_sierp{fx::sierp(), {}};
  for (int i = 0; i < 2; ++i)
    to_sierp.legs.emplace(gluing::GlObject::single(i),
                          gluing::SpaceMap::from_names(gd.patch(i), fx::sierp(),
                                                       {{"l", "t"}, {"m", "b"}, {"r", "t"}}));
  circ.add_cone("circ-to-sierp", gd.name,
                 gluing::complete_cone(gluing::GluingFunctor(gd), to_sierp));
  circ.add_covering(fx::c4_two_arcs());
  circ.add_covering(fx::sq9_two_strips());
  ok = write(dir, "gd_circ.json", circ) && ok;

  gluing::SpecDocument broken;
  broken.add_gluing(fx::broken_cocycle());
  ok = write(dir, "broken_cocycle.json", broken) && ok;

  gluing::SpecDocument torus;
  torus.add_meta(fx::torus_meta());
  ok = write(dir, "torus_meta.json", torus) && ok;

  gluing::SpecDocument counter;
  counter.add_meta(fx::torus_counter_meta());
  ok = write(dir, "torus_counter_meta.json", counter) && ok;
  return ok ? 0 : 1;
}
