#pragma once

#include "hopfcyc/pbw.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hc {

// Built-in algebras.  Instances are shared so that their memo tables are too.
std::shared_ptr<const PbwAlgebra> h1();
std::shared_ptr<const PbwAlgebra> h1s();
std::shared_ptr<const PbwAlgebra> h1dag(int N = 0);  // N = 0: sigma of infinite order
std::shared_ptr<const PbwAlgebra> group_algebra(int N = 0);
std::shared_ptr<const PbwAlgebra> u_minus();          // U(g_-): Y, X with [Y,X] = X
std::shared_ptr<const PbwAlgebra> f_plus();           // F: commutative on d_k
std::shared_ptr<const PbwAlgebra> z_algebra();        // C[Z], Z primitive
std::shared_ptr<const PbwAlgebra> hrt();
std::shared_ptr<const PbwAlgebra> hck();
std::shared_ptr<const PbwAlgebra> hckdag(int N = 0);

// Names: h1, h1s, h1dag, h1dagN:<N>, K, KmodN:<N>, u, f, z, hrt, hck, hckdag, hckdagN:<N>.
std::shared_ptr<const PbwAlgebra> algebra_by_name(const std::string& name);
std::vector<std::string> algebra_names();

}  // namespace hc
