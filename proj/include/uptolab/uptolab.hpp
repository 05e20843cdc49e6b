#ifndef UPTOLAB_UPTOLAB_HPP
#define UPTOLAB_UPTOLAB_HPP

#include "uptolab/error.hpp"
#include "uptolab/fixpoint.hpp"
#include "uptolab/lattice.hpp"
#include "uptolab/lattice_io.hpp"
#include "uptolab/random.hpp"
#include "uptolab/checker.hpp"
#include "uptolab/partition.hpp"
#include "uptolab/automata.hpp"
#include "uptolab/intpred.hpp"
#include "uptolab/sign.hpp"
#include "uptolab/flow.hpp"
#include "uptolab/toy.hpp"
#include "uptolab/report.hpp"
#include "uptolab/gallery.hpp"

#endif  // UPTOLAB_UPTOLAB_HPP
