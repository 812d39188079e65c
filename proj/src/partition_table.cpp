#include "pasym/partition_table.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "pasym/errors.hpp"
#include "pasym/rational.hpp"

namespace pasym {

PartitionTable::PartitionTable(std::size_t n_max) {
  values_.resize(n_max + 1);
  values_[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_class acc(0);
    for (std::size_t j = 1;; ++j) {
      std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      std::size_t g2 = j * (3 * j + 1) / 2;
      if (j % 2 == 1) {
        acc += values_[n - g1];
        if (g2 <= n) acc += values_[n - g2];
      } else {
        acc -= values_[n - g1];
        if (g2 <= n) acc -= values_[n - g2];
      }
    }
    values_[n] = acc;
  }
}

const mpz_class& PartitionTable::at(std::size_t n) const {
  if (n >= values_.size()) throw RangeError("PartitionTable: index beyond n_max");
  return values_[n];
}

mpq_class PartitionTable::exact_quotient(std::size_t n, unsigned k) const {
  if (k < 1) throw DomainError("exact_quotient: k must be >= 1");
  if (n + k >= values_.size()) throw RangeError("exact_quotient: n + k beyond n_max");
  mpq_class q(values_[n + k], values_[n]);
  q.canonicalize();
  return q;
}

Real PartitionTable::quotient(std::size_t n, unsigned k, unsigned bits) const {
  return Real::from_mpq(exact_quotient(n, k), bits);
}

int PartitionTable::delta_sign(unsigned r, unsigned j, std::size_t n) const {
  if (r < 1 || j < 1) throw DomainError("delta_sign: r and j must be >= 1");
  if (n < static_cast<std::size_t>(r) * j) throw RangeError("delta_sign: n < r*j");
  if (n >= values_.size()) throw RangeError("delta_sign: n beyond n_max");
  mpz_class acc(0);
  for (unsigned i = 0; i <= r; ++i) {
    mpz_class term = binomial(r, i) * values_[n - static_cast<std::size_t>(i) * j];
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return sgn(acc);
}

bool PartitionTable::log_concave_at(std::size_t n) const {
  if (n < 1 || n + 1 >= values_.size()) throw RangeError("log_concave_at: need 1 <= n < n_max");
  return values_[n] * values_[n] >= values_[n - 1] * values_[n + 1];
}

namespace {

constexpr char kMagic[8] = {'P', '5', 'T', 'A', 'B', 'L', 'E', '1'};

void put_u64(std::ofstream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::ifstream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw Error("partition cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void PartitionTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("partition cache: cannot open for writing: " + path);
  os.write(kMagic, sizeof(kMagic));
  put_u64(os, values_.size() - 1);
  std::vector<unsigned char> buf;
  for (const mpz_class& v : values_) {
    std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    buf.resize(count);
    std::size_t written = 0;
    mpz_export(buf.data(), &written, -1 /*LSB first*/, 1, 0, 0, v.get_mpz_t());
    put_u64(os, written);
    os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(written));
  }
  if (!os) throw Error("partition cache: write failed: " + path);
}

PartitionTable PartitionTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("partition cache: cannot open: " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw Error("partition cache: bad magic: " + path);
  std::uint64_t n_max = get_u64(is);
  PartitionTable t;
  t.values_.resize(n_max + 1);
  std::vector<unsigned char> buf;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::uint64_t len = get_u64(is);
    buf.resize(len);
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len));
    if (!is) throw Error("partition cache: truncated file");
    mpz_import(t.values_[n].get_mpz_t(), len, -1, 1, 0, 0, buf.data());
  }
  if (t.values_[0] != 1) throw Error("partition cache: corrupt (p(0) != 1)");
  return t;
}

}  // namespace pasym
