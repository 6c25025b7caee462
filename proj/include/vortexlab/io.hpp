// Snapshot and table output.
//
// GLF1 field snapshot (little-endian):
//   bytes  0..3   magic "GLF1"
//   byte   4      domain kind: 0 = torus, 1 = disk
//   bytes  5..7   reserved, zero
//   bytes  8..11  u32 n (points per side)
//   bytes 12..19  f64 extent (L or R)
//   then 4 arrays of n*n f64, row-major (index = iy*n + ix):
//   a1, a2, Re phi, Im phi.
// GLD1 is the dynamic variant: magic "GLD1", same header, 8 arrays
// (a1, a2, Re phi, Im phi, a1dot, a2dot, Re phidot, Im phidot).
//
// Files are written to <path>.tmp and renamed, so partially written
// artifacts never appear under the final name.
#ifndef VORTEXLAB_IO_HPP
#define VORTEXLAB_IO_HPP

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "vortexlab/field.hpp"
#include "vortexlab/grid.hpp"
#include "vortexlab/util.hpp"

namespace vortexlab {

namespace detail {

inline void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_f64(std::string& s, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int i = 0; i < 8; ++i) s.push_back(char((bits >> (8 * i)) & 0xff));
}

inline std::uint32_t get_u32(const char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(p[i])) << (8 * i);
    return v;
}

inline double get_f64(const char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= std::uint64_t(std::uint8_t(p[i])) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

inline void append_field(std::string& s, const RealField& f) {
    for (double x : f.v) put_f64(s, x);
}

inline void write_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("io: cannot open " + tmp);
        out.write(bytes.data(), std::streamsize(bytes.size()));
        if (!out) throw std::runtime_error("io: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline std::string header_bytes(const char magic[4], const Grid2D& g) {
    std::string s;
    s.append(magic, 4);
    s.push_back(g.domain == Domain::torus ? char(0) : char(1));
    s.append(3, char(0));
    put_u32(s, std::uint32_t(g.n));
    put_f64(s, g.extent);
    return s;
}

}  // namespace detail

inline void write_glf1(const std::string& path, const FieldConfig& cfg,
                       const Grid2D& g) {
    std::string s = detail::header_bytes("GLF1", g);
    detail::append_field(s, cfg.a1);
    detail::append_field(s, cfg.a2);
    for (const auto& z : cfg.phi.v) detail::put_f64(s, z.real());
    for (const auto& z : cfg.phi.v) detail::put_f64(s, z.imag());
    detail::write_atomic(path, s);
}

inline std::pair<FieldConfig, Grid2D> read_glf1(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (s.size() < 20 || s.compare(0, 4, "GLF1") != 0)
        throw std::runtime_error("io: not a GLF1 file: " + path);
    const Domain dom = s[4] == 0 ? Domain::torus : Domain::disk;
    const int n = int(detail::get_u32(s.data() + 8));
    const double extent = detail::get_f64(s.data() + 12);
    const Grid2D g = make_grid(dom, extent, n);
    const std::size_t nn = std::size_t(n) * n;
    if (s.size() != 20 + 4 * nn * 8) throw std::runtime_error("io: truncated GLF1 file");
    FieldConfig cfg;
    cfg.a1 = RealField(n);
    cfg.a2 = RealField(n);
    cfg.phi = CplxField(n);
    const char* p = s.data() + 20;
    for (std::size_t i = 0; i < nn; ++i) cfg.a1.v[i] = detail::get_f64(p + 8 * i);
    p += 8 * nn;
    for (std::size_t i = 0; i < nn; ++i) cfg.a2.v[i] = detail::get_f64(p + 8 * i);
    p += 8 * nn;
    for (std::size_t i = 0; i < nn; ++i) cfg.phi.v[i].real(detail::get_f64(p + 8 * i));
    p += 8 * nn;
    for (std::size_t i = 0; i < nn; ++i) cfg.phi.v[i].imag(detail::get_f64(p + 8 * i));
    return {std::move(cfg), g};
}

inline void write_gld1(const std::string& path, const FieldConfig& cfg,
                       const RealField& a1dot, const RealField& a2dot,
                       const CplxField& phidot, const Grid2D& g) {
    std::string s = detail::header_bytes("GLD1", g);
    detail::append_field(s, cfg.a1);
    detail::append_field(s, cfg.a2);
    for (const auto& z : cfg.phi.v) detail::put_f64(s, z.real());
    for (const auto& z : cfg.phi.v) detail::put_f64(s, z.imag());
    detail::append_field(s, a1dot);
    detail::append_field(s, a2dot);
    for (const auto& z : phidot.v) detail::put_f64(s, z.real());
    for (const auto& z : phidot.v) detail::put_f64(s, z.imag());
    detail::write_atomic(path, s);
}

/// Deterministic CSV: fixed %.17g double formatting, '\n' terminators.
class CsvWriter {
  public:
    explicit CsvWriter(std::string path) : path_(std::move(path)) {}

    void header(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) buf_ += ',';
            buf_ += cols[i];
        }
        buf_ += '\n';
    }

    void row(const std::vector<double>& vals) {
        char tmp[40];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) buf_ += ',';
            std::snprintf(tmp, sizeof tmp, "%.17g", vals[i]);
            buf_ += tmp;
        }
        buf_ += '\n';
    }

    void close() {
        detail::write_atomic(path_, buf_);
        buf_.clear();
    }

  private:
    std::string path_;
    std::string buf_;
};

}  // namespace vortexlab

#endif
