#pragma once

#include "pathhom/error.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/fixtures.hpp"
#include "pathhom/field.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/smith.hpp"
#include "pathhom/short_moves.hpp"
#include "pathhom/chain_complex.hpp"
#include "pathhom/cochain.hpp"
#include "pathhom/report.hpp"
#include "pathhom/verify.hpp"
