#pragma once

#include <dynmag/combination.hpp>
#include <dynmag/combinatorics.hpp>
#include <dynmag/coshuffle.hpp>
#include <dynmag/decomposition.hpp>
#include <dynmag/lie.hpp>
#include <dynmag/linalg.hpp>
#include <dynmag/lyndon.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/mu.hpp>
#include <dynmag/ncpoly.hpp>
#include <dynmag/nilpotent.hpp>
#include <dynmag/parallel.hpp>
#include <dynmag/pbw.hpp>
#include <dynmag/rational.hpp>
#include <dynmag/render.hpp>
#include <dynmag/serialize.hpp>
#include <dynmag/series.hpp>
#include <dynmag/symtensor.hpp>
#include <dynmag/verify.hpp>
