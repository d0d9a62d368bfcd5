#pragma once

#include "relspin/clifford.hpp"
#include "relspin/kinematics.hpp"
#include "relspin/spinor.hpp"
#include "relspin/spin_operators.hpp"
#include "relspin/wigner.hpp"
#include "relspin/spin_density.hpp"
#include "relspin/sweep_io.hpp"
#include "relspin/verify.hpp"
