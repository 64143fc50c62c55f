/// Umbrella header.
#pragma once

#include "automorphisms.hpp"
#include "blocks.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_classify.hpp"
#include "graph_constructions.hpp"
#include "graph_io.hpp"
#include "group_classify.hpp"
#include "group_families.hpp"
#include "group_io.hpp"
#include "group_search.hpp"
#include "perm_group.hpp"
#include "perm_isomorphism.hpp"
#include "permutation.hpp"
#include "stabilizer_chain.hpp"
#include "subgroup_pairs.hpp"
#include "table_rows.hpp"
#include "wreath.hpp"
