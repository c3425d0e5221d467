#pragma once

#include "bioclass/analysis.hpp"
#include "bioclass/correlation.hpp"
#include "bioclass/errors.hpp"
#include "bioclass/harness.hpp"
#include "bioclass/kmer.hpp"
#include "bioclass/linear_model.hpp"
#include "bioclass/match_kernel.hpp"
#include "bioclass/random.hpp"
#include "bioclass/reference_family.hpp"
#include "bioclass/sequence.hpp"
