// SPDX-License-Identifier: Apache-2.0

#include "pcgs/ply_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace pcgs {

namespace {

struct PropertyLayout {
  int xCol = -1, yCol = -1, zCol = -1;
  int nxCol = -1, nyCol = -1, nzCol = -1;
  int columns = 0;
};

struct ElementDecl {
  std::string name;
  size_t count = 0;
  PropertyLayout layout;
};

bool isScalarType(const std::string& t) {
  return t == "float" || t == "float32" || t == "double" || t == "float64" ||
         t == "int" || t == "int32" || t == "uint" || t == "uint32" ||
         t == "short" || t == "int16" || t == "ushort" || t == "uint16" ||
         t == "char" || t == "int8" || t == "uchar" || t == "uint8";
}

}  // namespace

RawCloud loadPly(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PlyError("cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line) || line.substr(0, 3) != "ply")
    throw PlyMalformedHeader("not a PLY file: " + path.string());

  std::vector<ElementDecl> elements;
  bool sawFormat = false;
  bool sawEnd = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw.empty() || kw == "comment" || kw == "obj_info") continue;
    if (kw == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt != "ascii")
        throw PlyUnsupportedFormat("unsupported PLY format '" + fmt +
                                   "' (only ascii 1.0)");
      sawFormat = true;
    } else if (kw == "element") {
      ElementDecl e;
      if (!(ls >> e.name >> e.count))
        throw PlyMalformedHeader("bad element line: " + line);
      elements.push_back(e);
    } else if (kw == "property") {
      if (elements.empty())
        throw PlyMalformedHeader("property before any element");
      std::string type;
      ls >> type;
      if (type == "list") {
        // list properties occupy a variable field count; only tolerated on
        // non-vertex elements, whose rows we skip wholesale
        if (elements.back().name == "vertex")
          throw PlyMalformedHeader("list property on vertex element");
        continue;
      }
      if (!isScalarType(type))
        throw PlyMalformedHeader("unknown property type '" + type + "'");
      std::string name;
      if (!(ls >> name)) throw PlyMalformedHeader("bad property line: " + line);
      PropertyLayout& lay = elements.back().layout;
      const int col = lay.columns++;
      if (name == "x") lay.xCol = col;
      else if (name == "y") lay.yCol = col;
      else if (name == "z") lay.zCol = col;
      else if (name == "nx") lay.nxCol = col;
      else if (name == "ny") lay.nyCol = col;
      else if (name == "nz") lay.nzCol = col;
    } else if (kw == "end_header") {
      sawEnd = true;
      break;
    } else {
      throw PlyMalformedHeader("unrecognized header keyword '" + kw + "'");
    }
  }
  if (!sawEnd || !sawFormat) throw PlyMalformedHeader("missing end_header/format");

  const ElementDecl* vertex = nullptr;
  for (const auto& e : elements)
    if (e.name == "vertex") vertex = &e;
  if (!vertex) throw PlyMalformedHeader("no vertex element");
  const PropertyLayout& lay = vertex->layout;
  if (lay.xCol < 0 || lay.yCol < 0 || lay.zCol < 0)
    throw PlyMissingProperty("vertex element lacks x/y/z properties");
  const bool withNormals = lay.nxCol >= 0 && lay.nyCol >= 0 && lay.nzCol >= 0;

  RawCloud cloud;
  cloud.positions.reserve(vertex->count);
  if (withNormals) cloud.normals.reserve(vertex->count);

  std::vector<double> row(lay.columns);
  for (const auto& e : elements) {
    if (e.name != "vertex") {
      // skip one line per row of a foreign element
      for (size_t i = 0; i < e.count; ++i)
        if (!std::getline(in, line))
          throw PlyError("unexpected EOF in element '" + e.name + "'");
      continue;
    }
    for (size_t i = 0; i < e.count; ++i) {
      if (!std::getline(in, line))
        throw PlyError("unexpected EOF: vertex " + std::to_string(i) + " of " +
                       std::to_string(e.count));
      std::istringstream ls(line);
      for (int c = 0; c < lay.columns; ++c)
        if (!(ls >> row[c]))
          throw PlyError("bad vertex row " + std::to_string(i));
      cloud.positions.push_back({row[lay.xCol], row[lay.yCol], row[lay.zCol]});
      if (withNormals) {
        Vec3d n{row[lay.nxCol], row[lay.nyCol], row[lay.nzCol]};
        const double len = n.norm();
        cloud.normals.push_back(len > 1e-12 ? n * (1.0 / len) : Vec3d{0, 0, 1});
      }
    }
  }
  return cloud;
}

namespace {

void writeHeader(std::ofstream& out, size_t n, bool normals, bool intCoords) {
  const char* ct = intCoords ? "int" : "double";
  out << "ply\nformat ascii 1.0\nelement vertex " << n << "\n";
  out << "property " << ct << " x\nproperty " << ct << " y\nproperty " << ct
      << " z\n";
  if (normals)
    out << "property double nx\nproperty double ny\nproperty double nz\n";
  out << "end_header\n";
}

std::string fmtDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void savePly(const std::filesystem::path& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw PlyError("cannot write " + path.string());
  writeHeader(out, cloud.points.size(), cloud.hasNormals(), true);
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    const Point3& p = cloud.points[i];
    out << p.x << ' ' << p.y << ' ' << p.z;
    if (cloud.hasNormals()) {
      const Vec3d& n = cloud.normals[i];
      out << ' ' << fmtDouble(n.x) << ' ' << fmtDouble(n.y) << ' '
          << fmtDouble(n.z);
    }
    out << '\n';
  }
  if (!out) throw PlyError("write failed: " + path.string());
}

void savePly(const std::filesystem::path& path, const RawCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw PlyError("cannot write " + path.string());
  writeHeader(out, cloud.positions.size(), cloud.hasNormals(), false);
  for (size_t i = 0; i < cloud.positions.size(); ++i) {
    const Vec3d& p = cloud.positions[i];
    out << fmtDouble(p.x) << ' ' << fmtDouble(p.y) << ' ' << fmtDouble(p.z);
    if (cloud.hasNormals()) {
      const Vec3d& n = cloud.normals[i];
      out << ' ' << fmtDouble(n.x) << ' ' << fmtDouble(n.y) << ' '
          << fmtDouble(n.z);
    }
    out << '\n';
  }
  if (!out) throw PlyError("write failed: " + path.string());
}

}  // namespace pcgs
