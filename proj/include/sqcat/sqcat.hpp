#pragma once

#include "sqcat/analytics.hpp"
#include "sqcat/dynamics.hpp"
#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"
#include "sqcat/hilbert.hpp"
#include "sqcat/numerics.hpp"
#include "sqcat/observables.hpp"
#include "sqcat/params.hpp"
#include "sqcat/transforms.hpp"
