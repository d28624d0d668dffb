#include "helmprop/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace helmprop {

static_assert(std::endian::native == std::endian::little,
              "HLF1 I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'H', 'L', 'F', '1'};

void write_bytes(std::ostream& out, const void* p, std::size_t nbytes) {
  out.write(static_cast<const char*>(p), static_cast<std::streamsize>(nbytes));
}

void read_bytes(std::istream& in, void* p, std::size_t nbytes,
                std::size_t& consumed) {
  in.read(static_cast<char*>(p), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::size_t>(in.gcount()) != nbytes)
    throw Error(ErrorKind::Format,
                "truncated HLF1 file: expected " +
                    std::to_string(consumed + nbytes) + " bytes, got " +
                    std::to_string(consumed + in.gcount()));
  consumed += nbytes;
}

}  // namespace

void save_field(const SampledField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open for writing: " + path);

  write_bytes(out, kMagic, 4);
  const std::uint32_t d = static_cast<std::uint32_t>(f.grid.dim());
  write_bytes(out, &d, 4);
  for (int j = 0; j < f.grid.dim(); ++j) {
    const std::uint32_t nj = static_cast<std::uint32_t>(f.grid.n[j]);
    write_bytes(out, &nj, 4);
  }
  for (int j = 0; j < f.grid.dim(); ++j)
    write_bytes(out, &f.grid.spacing[j], 8);
  for (int j = 0; j < f.grid.dim(); ++j)
    write_bytes(out, &f.grid.origin[j], 8);
  write_bytes(out, &f.hbar, 8);
  // std::complex<double> is layout-compatible with double[2] (real, imag).
  write_bytes(out, f.samples.data(), f.samples.size() * sizeof(Complex));
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

SampledField load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open for reading: " + path);
  std::size_t consumed = 0;

  char magic[4];
  read_bytes(in, magic, 4, consumed);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw Error(ErrorKind::Format, "bad magic: not an HLF1 field file");

  std::uint32_t d = 0;
  read_bytes(in, &d, 4, consumed);
  if (d < 1 || d > 2)
    throw Error(ErrorKind::Format,
                "unsupported dimension d=" + std::to_string(d) +
                    " (sampled fields support d in {1, 2})");

  std::vector<std::int64_t> n(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    std::uint32_t nj = 0;
    read_bytes(in, &nj, 4, consumed);
    n[j] = nj;
  }
  std::vector<double> spacing(d), origin(d);
  for (std::uint32_t j = 0; j < d; ++j) read_bytes(in, &spacing[j], 8, consumed);
  for (std::uint32_t j = 0; j < d; ++j) read_bytes(in, &origin[j], 8, consumed);
  double hbar = 0.0;
  read_bytes(in, &hbar, 8, consumed);

  SampledField f(Grid(n, spacing, origin), hbar);
  read_bytes(in, f.samples.data(), f.samples.size() * sizeof(Complex), consumed);
  return f;
}

}  // namespace helmprop
