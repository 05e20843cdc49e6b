#ifndef UPTOLAB_LATTICE_IO_HPP
#define UPTOLAB_LATTICE_IO_HPP

// Line-oriented lattice files:
//
//   elem <name>
//   cover <lo> <hi>
//   map <mapname> <from> <to>
//
// '#' starts a comment. Every named map must be total.

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "uptolab/error.hpp"
#include "uptolab/lattice.hpp"

namespace uptolab {

struct LatticeFile {
  LatticePtr lattice;
  std::map<std::string, std::vector<Elem>> maps;  // raw tables, may be non-monotone

  MonotoneMap map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw Error(Errc::Parse, "no map named '" + name + "'");
    return MonotoneMap(lattice, it->second);
  }
};

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline LatticeFile parse_lattice(std::istream& in, const std::string& source = "<input>") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  struct Entry { std::string map, from, to; std::size_t line; };
  std::vector<Entry> entries;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(Errc::Parse, source + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (toks[0] == "elem") {
      if (toks.size() != 2) fail("expected 'elem <name>'");
      names.push_back(toks[1]);
    } else if (toks[0] == "cover") {
      if (toks.size() != 3) fail("expected 'cover <lo> <hi>'");
      covers.emplace_back(toks[1], toks[2]);
    } else if (toks[0] == "map") {
      if (toks.size() != 4) fail("expected 'map <mapname> <from> <to>'");
      entries.push_back({toks[1], toks[2], toks[3], lineno});
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  LatticeFile lf;
  try {
    lf.lattice = build_lattice(names, covers);
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) throw Error(Errc::Parse, source + ": " + e.detail());
    throw;
  }
  const auto& L = *lf.lattice;
  std::map<std::string, std::vector<std::optional<Elem>>> partial;
  for (const auto& e : entries) {
    auto from = L.find(e.from), to = L.find(e.to);
    if (!from || !to)
      throw Error(Errc::Parse, source + ":" + std::to_string(e.line) + ": unknown element '" +
                                   (!from ? e.from : e.to) + "'");
    auto& t = partial[e.map];
    t.resize(L.size());
    if (t[*from] && *t[*from] != *to)
      throw Error(Errc::Parse, source + ":" + std::to_string(e.line) + ": map '" + e.map +
                                   "' given two images for " + e.from);
    t[*from] = *to;
  }
  for (auto& [name, t] : partial) {
    std::vector<Elem> table;
    for (Elem x = 0; x < L.size(); ++x) {
      if (!t[x]) throw Error(Errc::Parse, source + ": map '" + name + "' has no image for " + L.name(x));
      table.push_back(*t[x]);
    }
    lf.maps.emplace(name, std::move(table));
  }
  return lf;
}

inline LatticeFile parse_lattice_string(const std::string& text) {
  std::istringstream is(text);
  return parse_lattice(is);
}

inline LatticeFile load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return parse_lattice(in, path);
}

}  // namespace uptolab

#endif  // UPTOLAB_LATTICE_IO_HPP
