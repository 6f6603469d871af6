#include "sobwave/serialize.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>

namespace sobwave {
namespace {

static_assert(std::endian::native == std::endian::little,
              "container writes little-endian float64 directly");

constexpr char kMagic[4] = {'S', 'O', 'B', 'W'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

// Maximal runs of set bins on the discretized circle.
std::vector<std::pair<int, int>> mask_arcs(const DirectionSet& cone) {
    std::vector<std::pair<int, int>> arcs;  // (start bin, length)
    const int n = cone.nbins();
    if (cone.full()) {
        arcs.emplace_back(0, n);
        return arcs;
    }
    for (int b = 0; b < n; ++b) {
        const bool prev = cone.test((b + n - 1) % n);
        if (!cone.test(b) || prev) continue;
        int len = 0;
        while (cone.test((b + len) % n)) ++len;
        arcs.emplace_back(b, len);
    }
    return arcs;
}

}  // namespace

void write_spectral(const SpectralDistribution& u, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw_error(ErrorCode::IoError, "cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(u.grid().dim));
    put_u32(os, static_cast<std::uint32_t>(u.grid().size));
    put_u32(os, static_cast<std::uint32_t>(u.provenance().size()));
    os.write(u.provenance().data(), static_cast<std::streamsize>(u.provenance().size()));
    os.write(reinterpret_cast<const char*>(u.coeffs().data()),
             static_cast<std::streamsize>(u.coeffs().size() * sizeof(cplx)));
    if (!os) throw_error(ErrorCode::IoError, "short write: " + path);
}

SpectralDistribution read_spectral(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw_error(ErrorCode::IoError, "cannot open for reading: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw_error(ErrorCode::IoError, "not a spectral container: " + path);
    const std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw_error(ErrorCode::IoError, "unsupported container version");
    GridSpec grid{static_cast<int>(get_u32(is)), static_cast<int>(get_u32(is))};
    grid.validate();
    const std::uint32_t plen = get_u32(is);
    std::string provenance(plen, '\0');
    is.read(provenance.data(), plen);
    std::vector<cplx> coeffs(grid.total());
    is.read(reinterpret_cast<char*>(coeffs.data()),
            static_cast<std::streamsize>(coeffs.size() * sizeof(cplx)));
    if (!is) throw_error(ErrorCode::IoError, "truncated container: " + path);
    return SpectralDistribution(grid, std::move(coeffs), std::nullopt, provenance);
}

std::string conic_to_json(const ConicRegionSet& l) {
    nlohmann::ordered_json root;
    root["dim"] = l.dim();
    root["nbins"] = l.nbins();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [region, cone] : l.parts()) {
        nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
        for (const Box& b : region.boxes()) {
            if (l.dim() == 1)
                boxes.push_back({b.lo[0], b.hi[0]});
            else
                boxes.push_back({b.lo[0], b.hi[0], b.lo[1], b.hi[1]});
        }
        for (const auto& [start, len] : mask_arcs(cone)) {
            nlohmann::ordered_json entry;
            entry["boxes"] = boxes;
            nlohmann::ordered_json cj;
            if (l.dim() == 1) {
                cj["centers"] = {start == 0 ? 1.0 : -1.0};
                if (len == 2) cj["centers"] = {1.0, -1.0};
                cj["half_angle"] = 0.0;
            } else {
                const double width = 2.0 * std::numbers::pi / l.nbins();
                cj["centers"] = {width * (start + 0.5 * (len - 1))};
                cj["half_angle"] = 0.5 * width * (len - 1);
            }
            entry["cone"] = cj;
            entries.push_back(entry);
        }
    }
    root["entries"] = entries;
    return root.dump(2);
}

ConicRegionSet conic_from_json(const std::string& json_text) {
    nlohmann::json root = nlohmann::json::parse(json_text);
    const int dim = root.at("dim").get<int>();
    const int nbins = root.at("nbins").get<int>();
    ConicRegionSet l(dim, nbins);
    for (const auto& entry : root.at("entries")) {
        std::vector<Box> boxes;
        for (const auto& jb : entry.at("boxes")) {
            Box b;
            b.dim = dim;
            if (dim == 1) {
                b.lo[0] = jb.at(0).get<double>();
                b.hi[0] = jb.at(1).get<double>();
            } else {
                b.lo[0] = jb.at(0).get<double>();
                b.hi[0] = jb.at(1).get<double>();
                b.lo[1] = jb.at(2).get<double>();
                b.hi[1] = jb.at(3).get<double>();
            }
            boxes.push_back(b);
        }
        const auto& cj = entry.at("cone");
        DirectionSet cone = DirectionSet::empty_set(dim, nbins);
        const double half = cj.at("half_angle").get<double>();
        for (const auto& jc : cj.at("centers")) {
            const double c = jc.get<double>();
            if (dim == 1) {
                cone.set(c > 0 ? 0 : 1);
            } else {
                cone = cone.unite(cone_from_caps(2, {c}, std::max(half, 1e-9), nbins));
            }
        }
        l.add(SpatialRegion(dim, boxes), cone);
    }
    return l;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw_error(ErrorCode::IoError, "cannot open for writing: " + path);
    os << text;
    if (!os) throw_error(ErrorCode::IoError, "short write: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw_error(ErrorCode::IoError, "cannot open for reading: " + path);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace sobwave
