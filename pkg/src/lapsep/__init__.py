"""lapsep: separability of graph Laplacian density matrices over vertex labelings.

The normalized Laplacian L / tr(L) of a nonempty graph is a density
matrix.  Whether it is separable with respect to a tensor factorization of
the vertex count depends on how vertices are mapped to index tuples; this
package decides per-labeling verdicts via the partial-transpose degree
condition and an exact PPT test, constructs entangling labelings for
noncomplete graphs, and classifies graphs by quantifying over labelings.
"""

from ._backend import BACKEND
from .classify import (GraphClass, GraphClassReport, LabelingVerdict, ScanRow,
                       Verdict, classify, scan, verdict)
from .density import (DensityMatrix, LaplacianMatrix, NptWitness, PptResult,
                      charpoly_exact, density_matrix, is_ppt, is_psd_exact,
                      laplacian, matrix_partial_transpose, normalize)
from .entangle import (EntanglingCertificate, choose_split, entangling_labeling,
                       fallback_search, find_entangling_labeling)
from .errors import (CrossValidationError, EmptyGraphError, Graph6Error,
                     LapsepError, NoEntanglingLabelingError,
                     SearchBudgetExceededError)
from .graphs import (Graph, complement, complete_bipartite, complete_graph,
                     edges_between, graph_from_edges, is_linear_forest,
                     parse_graph6, random_graph, to_graph6)
from .labeling import (TensorShape, VertexLabeling, enumerate_labelings,
                       flatten, position_symmetry_maps, symmetry_group_order,
                       unflatten)
from .pigeonhole import BoxDistribution, guaranteed_total, select_boxes
from .ptgraph import (BipartiteSplit, all_cuts, degree_condition,
                      partial_transpose_graph, pt_degrees, single_factor_split,
                      split_labeling, expand_labeling, split_of_shape)

__version__ = "0.1.0"
