#include "hopfcyc/family.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hc {

namespace {

std::shared_ptr<const PbwAlgebra> cached(const std::string& key, PbwSpec spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const PbwAlgebra>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  spec.name = key;
  auto a = make_pbw(std::move(spec));
  table.emplace(key, a);
  return a;
}

int parse_modulus(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad modulus in algebra name " + name);
  int N = std::stoi(rest);
  if (N < 2) throw std::invalid_argument("modulus must be >= 2 in " + name);
  return N;
}

}  // namespace

std::shared_ptr<const PbwAlgebra> h1() { return cached("h1", {"", false, 0, true, h1_letters()}); }
std::shared_ptr<const PbwAlgebra> h1s() { return cached("h1s", {"", false, 0, true, z_letter()}); }
std::shared_ptr<const PbwAlgebra> h1dag(int N) {
  return cached(N ? "h1dagN:" + std::to_string(N) : "h1dag", {"", true, N, true, h1_letters()});
}
std::shared_ptr<const PbwAlgebra> group_algebra(int N) {
  return cached(N ? "KmodN:" + std::to_string(N) : "K", {"", true, N, false, nullptr});
}
std::shared_ptr<const PbwAlgebra> u_minus() { return cached("u", {"", false, 0, true, nullptr}); }
std::shared_ptr<const PbwAlgebra> f_plus() { return cached("f", {"", false, 0, false, h1_letters()}); }
std::shared_ptr<const PbwAlgebra> z_algebra() { return cached("z", {"", false, 0, false, z_letter()}); }
std::shared_ptr<const PbwAlgebra> hrt() { return cached("hrt", {"", false, 0, false, tree_letters()}); }
std::shared_ptr<const PbwAlgebra> hck() { return cached("hck", {"", false, 0, true, tree_letters()}); }
std::shared_ptr<const PbwAlgebra> hckdag(int N) {
  return cached(N ? "hckdagN:" + std::to_string(N) : "hckdag", {"", true, N, true, tree_letters()});
}

std::shared_ptr<const PbwAlgebra> algebra_by_name(const std::string& n) {
  if (n == "h1") return h1();
  if (n == "h1s") return h1s();
  if (n == "h1dag") return h1dag(0);
  if (n.rfind("h1dagN:", 0) == 0) return h1dag(parse_modulus(n, "h1dagN:"));
  if (n == "K") return group_algebra(0);
  if (n.rfind("KmodN:", 0) == 0) return group_algebra(parse_modulus(n, "KmodN:"));
  if (n == "u" || n == "u_gminus") return u_minus();
  if (n == "f") return f_plus();
  if (n == "z") return z_algebra();
  if (n == "hrt") return hrt();
  if (n == "hck") return hck();
  if (n == "hckdag") return hckdag(0);
  if (n.rfind("hckdagN:", 0) == 0) return hckdag(parse_modulus(n, "hckdagN:"));
  throw std::invalid_argument("unknown algebra: " + n);
}

std::vector<std::string> algebra_names() {
  return {"h1", "h1s", "h1dag", "h1dagN:<N>", "K", "KmodN:<N>", "u", "f", "z", "hrt", "hck", "hckdag", "hckdagN:<N>"};
}

}  // namespace hc
