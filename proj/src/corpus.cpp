#include "tfc/corpus.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

namespace tfc {

std::vector<GenSpec> parse_corpus_spec(std::string_view text) {
  std::vector<GenSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') continue;
    GenSpec spec;
    spec.name = first;
    if (!(tokens >> spec.family)) throw ParseError(line_no, "missing family");
    std::string kv;
    while (tokens >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "expected key=value, got '" + kv + "'");
      if (!spec.params.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second) {
        throw ParseError(line_no, "repeated parameter '" + kv.substr(0, eq) + "'");
      }
    }
    out.push_back(std::move(spec));
  }
  return out;
}

std::string default_corpus_spec() {
  std::ostringstream os;
  os << "# name family params\n";
  for (int k = 3; k <= 4; ++k) os << "grid-" << k << "-1 grid k=" << k << " m=1\n";
  for (int m : {2, 3, 4, 5, 6, 8, 14}) os << "grid-3-" << m << " grid k=3 m=" << m << "\n";
  for (int m : {2, 3, 4, 5, 9}) os << "grid-4-" << m << " grid k=4 m=" << m << "\n";
  for (int m : {2, 3, 4}) os << "grid-5-" << m << " grid k=5 m=" << m << "\n";
  for (int m : {2, 3, 4}) os << "grid-6-" << m << " grid k=6 m=" << m << "\n";
  for (int m : {2, 3}) os << "grid-7-" << m << " grid k=7 m=" << m << "\n";
  os << "grid-8-2 grid k=8 m=2\n";
  for (int t : {1, 2, 3, 5, 8, 13}) os << "chain-" << t << " feq-chain t=" << t << "\n";
  for (auto [k, r] : {std::pair{3, 1}, {3, 2}, {3, 12}, {4, 1}, {4, 2}, {4, 16}, {5, 2}, {6, 2}}) {
    os << "flip-" << k << "-" << r << " flip-chain k=" << k << " rounds=" << r << "\n";
  }
  for (auto [k, m] : {std::pair{3, 3}, {3, 5}, {4, 3}, {4, 4}, {5, 3}}) {
    os << "split-" << k << "-" << m << " split-grid k=" << k << " m=" << m << "\n";
  }
  os << "capped-1-5-1 capped-grid t1=1 m=5 t2=1\n";
  os << "capped-2-2-2 capped-grid t1=2 m=2 t2=2\n";
  os << "capped-2-6-2 capped-grid t1=2 m=6 t2=2\n";
  os << "tapered-3-1-4 tapered inner=3 steps=1 m=4\n";
  os << "tapered-3-2-3 tapered inner=3 steps=2 m=3\n";
  os << "tapered-4-1-3 tapered inner=4 steps=1 m=3\n";
  os << "near33-plain near33 m=4\n";
  os << "near33-top near33 m=4 s1=0\n";
  os << "near33-both near33 m=5 s1=1 s2=2\n";
  for (int n = 1; n <= 4; ++n) os << "tw-" << n << " thomas-walls n=" << n << "\n";
  for (int n = 2; n <= 6; ++n) os << "rtw-" << n << " reduced-tw n=" << n << "\n";
  for (int r = 0; r <= 2; ++r) os << "patch-" << r << " patch rings=" << r << "\n";
  os << "ptw-3 patched-tw n=3\n";
  os << "ptw-4 patched-tw n=4\n";
  os << "ptw-5-ring patched-tw n=5 rings=1\n";
  os << "framed-3 framed-tw n=3\n";
  os << "framed-3-reuse framed-tw n=3 y1=reuse w1=reuse\n";
  os << "framed-4-mixed framed-tw n=4 w1=reuse y2=reuse\n";
  return os.str();
}

std::vector<CorpusEntry> build_corpus(const std::vector<GenSpec>& specs) {
  std::set<std::string> names;
  std::vector<CorpusEntry> out;
  for (const GenSpec& spec : specs) {
    if (!names.insert(spec.name).second) throw Error("duplicate corpus name '" + spec.name + "'");
    CorpusEntry e;
    e.spec = spec;
    try {
      e.graph = generate(spec);
    } catch (const Error& err) {
      throw Error(spec.name + ": " + err.what());
    }
    e.emg = serialize_emg(e.graph);
    e.sha256 = sha256_hex(e.emg);
    out.push_back(std::move(e));
  }
  return out;
}

std::string manifest(const std::vector<CorpusEntry>& entries) {
  std::string out;
  for (const CorpusEntry& e : entries) {
    out += e.spec.name + "\t" + e.spec.family + "\t" + format_params(e.spec.params) + "\t" + e.sha256 + "\n";
  }
  return out;
}

void write_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw Error("cannot write " + path.string());
  };
  for (const CorpusEntry& e : entries) write(dir / (e.spec.name + ".emg"), e.emg);
  write(dir / "MANIFEST.tsv", manifest(entries));
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace tfc
