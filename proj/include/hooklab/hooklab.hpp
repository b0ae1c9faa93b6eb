#pragma once

#include "det_identities.hpp"
#include "errors.hpp"
#include "excitation.hpp"
#include "hook.hpp"
#include "hpoly.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "profile_checks.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "schur.hpp"
#include "tableau.hpp"
#include "twisted.hpp"
