#!/usr/bin/env python3
"""
Complementarity Spectrum Command Line
spectrum | classify | generate | census | verify over edge-list files, with
deterministic JSON on stdout and diagnostics on stderr

Exit codes: 0 success, 1 other toolkit failure, 2 bad input or parameters,
3 digraph above the enumeration cap, 4 witness failure or recognizer/oracle disagreement
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from complementarity_spectrum import ComplementaritySpectrumAnalyzer
from compspec_config import __version__, load_config
from compspec_errors import (BadParams, ComplementaritySpectrumError, ConfigError,
                             EdgeListParseError, RecognizerDisagreement, TooLarge,
                             WitnessInvalid)
from digraph_core import Digraph, is_acyclic
from digraph_families import GENERATORS, SEVEN_FAMILIES, generate
from edge_list_io import (arcs_one_indexed, build_document, encode_document, format_edge_list,
                          read_edge_list, write_edge_list)
from perron_spectra import verify_complementarity_eigenvalue
from three_eigenvalue_classifier import (AT_LEAST_FOUR, CYCLE, ISOLATED_VERTEX,
                                         ThreeEigenvalueClassifier)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_TOO_LARGE = 3
EXIT_DISAGREEMENT = 4

CARDINALITY_BUCKETS = ('1', '2', '3', AT_LEAST_FOUR)
CENSUS_CHUNK = 4096
CENSUS_DEFAULT_MAX_N = 3


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (EdgeListParseError, BadParams, ConfigError, OSError)):
        return EXIT_BAD_INPUT
    if isinstance(error, TooLarge):
        return EXIT_TOO_LARGE
    if isinstance(error, (WitnessInvalid, RecognizerDisagreement)):
        return EXIT_DISAGREEMENT
    return EXIT_FAILURE


def parse_family_params(family: str, raw: Sequence[str]) -> tuple:
    """
    Command-line parameters to generator arguments

    type4 takes n and a chord list "x1,y1;x2,y2;..."; every other family takes integers.
    """
    try:
        if family == 'type4':
            if len(raw) != 2:
                raise BadParams('type4', "params are n and 'x1,y1;x2,y2;...'")
            pairs = tuple(tuple(int(t) for t in chunk.split(',')) for chunk in raw[1].split(';'))
            if any(len(p) != 2 for p in pairs):
                raise BadParams('type4', "each chord is 'x,y'")
            return int(raw[0]), pairs
        return tuple(int(t) for t in raw)
    except BadParams:
        raise
    except ValueError:
        raise BadParams(family, f"integer parameters, got {list(raw)}")


def bucket_for(count: int) -> str:
    return str(count) if count <= 3 else AT_LEAST_FOUR


def digraph_from_index(n: int, index: int) -> Digraph:
    """Bit t of index selects the t-th ordered pair (u, v), u != v, in lexicographic order"""
    pairs = list(permutations(range(n), 2))
    pairs.sort()
    return Digraph(n, frozenset(p for t, p in enumerate(pairs) if index >> t & 1))


def census_chunk(n: int, start: int, stop: int, config: Dict) -> Dict:
    """Classify digraphs start..stop-1 on n vertices against the oracle"""
    classifier = ThreeEigenvalueClassifier(config)
    counts = {bucket: 0 for bucket in CARDINALITY_BUCKETS}
    members = 0
    failures: List[Dict] = []

    for index in range(start, stop):
        D = digraph_from_index(n, index)
        arcs = [list(arc) for arc in arcs_one_indexed(D)]
        try:
            result = classifier.classify_digraph(D, oracle=True)
        except TooLarge:
            raise
        except ComplementaritySpectrumError as e:
            failures.append({'n': n, 'index': index, 'arcs': arcs,
                             'reason': f"{type(e).__name__}: {e}"})
            continue

        oracle_count = len(result.oracle_spectrum)
        counts[bucket_for(oracle_count)] += 1
        tags = [d.tag for d in result.scc_descriptors]
        if len(tags) == 1 and tags[0] in SEVEN_FAMILIES:
            members += 1

        reasons = []
        if result.agreement is not True:
            reasons.append(f"fast verdict {result.cardinality!r} vs oracle {oracle_count}")
        if (oracle_count == 1) != is_acyclic(D):
            reasons.append("cardinality 1 does not match acyclicity")
        simple = not is_acyclic(D) and all(t in (ISOLATED_VERTEX, CYCLE) for t in tags)
        if (oracle_count == 2) != simple:
            reasons.append("cardinality 2 does not match cycle-or-vertex components")
        if reasons:
            failures.append({'n': n, 'index': index, 'arcs': arcs, 'reason': '; '.join(reasons)})

    return {'counts': counts, 'seven_family_members': members, 'failures': failures}


class DigraphCensus:
    def __init__(self, config: Optional[Dict] = None):
        """
        Exhaustive census of labeled simple digraphs

        Args:
            config: overrides for compspec_config.DEFAULT_CONFIG; census_max_n bounds the run
        """
        self.config = load_config(config)

    def run(self, max_n: int, jobs: int = 1) -> Dict:
        if max_n < 1 or max_n > self.config['census_max_n']:
            raise ConfigError(f"census max-n must be in 1..{self.config['census_max_n']}, got {max_n}")
        if jobs < 1:
            raise ConfigError(f"--jobs must be positive, got {jobs}")

        tasks: List[Tuple[int, int, int]] = []
        for n in range(1, max_n + 1):
            total = 1 << (n * (n - 1))
            tasks.extend((n, start, min(start + CENSUS_CHUNK, total))
                         for start in range(0, total, CENSUS_CHUNK))

        if jobs == 1:
            chunks = [census_chunk(n, start, stop, self.config) for n, start, stop in tasks]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(census_chunk, n, start, stop, self.config)
                           for n, start, stop in tasks]
                chunks = [future.result() for future in futures]

        per_n: Dict[str, Dict] = {}
        failures: List[Dict] = []
        for (n, start, stop), chunk in zip(tasks, chunks):
            table = per_n.setdefault(str(n), {
                'total': 0,
                'by_cardinality': {bucket: 0 for bucket in CARDINALITY_BUCKETS},
                'seven_family_members': 0,
            })
            table['total'] += stop - start
            for bucket, count in chunk['counts'].items():
                table['by_cardinality'][bucket] += count
            table['seven_family_members'] += chunk['seven_family_members']
            failures.extend(chunk['failures'])
            logger.info(f"census n={n}: digraphs {start}..{stop - 1} done")

        return {'largest_n': max_n, 'per_n': per_n, 'disagreements': failures}


def cmd_spectrum(args, config: Dict) -> Tuple[Dict, int]:
    D = read_edge_list(args.file)
    spectrum = ComplementaritySpectrumAnalyzer(config).comp_spectrum(D)
    payload = {'spectrum': spectrum.to_dict(), 'cardinality': len(spectrum)}
    return build_document('spectrum', payload, D, config), EXIT_OK


def cmd_classify(args, config: Dict) -> Tuple[Dict, int]:
    D = read_edge_list(args.file)
    classification = ThreeEigenvalueClassifier(config).classify_digraph(D, oracle=args.oracle)
    code = EXIT_DISAGREEMENT if args.oracle and classification.agreement is False else EXIT_OK
    if code != EXIT_OK:
        logger.error(f"fast verdict {classification.cardinality!r} disagrees with "
                     f"oracle count {len(classification.oracle_spectrum)}")
    return build_document('classify', classification.to_dict(), D, config), code


def cmd_generate(args, config: Dict) -> Tuple[str, int]:
    params = parse_family_params(args.family, args.params)
    D = generate(args.family, params)
    comment = f"{args.family} {' '.join(args.params)}"
    if args.out:
        write_edge_list(D, args.out, comment)
        return '', EXIT_OK
    return format_edge_list(D, comment), EXIT_OK


def cmd_census(args, config: Dict) -> Tuple[Dict, int]:
    report = DigraphCensus(config).run(args.max_n, args.jobs)
    for failure in report['disagreements']:
        logger.error(f"counterexample n={failure['n']} arcs={failure['arcs']}: {failure['reason']}")
    code = EXIT_DISAGREEMENT if report['disagreements'] else EXIT_OK
    return build_document('census', report, None, config), code


def cmd_verify(args, config: Dict) -> Tuple[Dict, int]:
    D = read_edge_list(args.file)
    spectrum = ComplementaritySpectrumAnalyzer(config).comp_spectrum(D)
    eps = config['verify_eps']
    checks = []
    for value, witness in zip(spectrum.values, spectrum.witnesses):
        result = verify_complementarity_eigenvalue(D, value + args.lambda_offset, witness,
                                                   eps=eps, tol=config['cert_tol'])
        checks.append({
            'value': value,
            'witness': [v + 1 for v in witness],
            'max_violation': result.max_violation,
            'complementarity': result.complementarity,
        })
    payload = {
        'witnesses': checks,
        'max_violation': max(c['max_violation'] for c in checks),
        'max_complementarity': max(abs(c['complementarity']) for c in checks),
    }
    return build_document('verify', payload, D, config), EXIT_OK


def print_spectrum_summary(document: Dict) -> None:
    print(f"🔍 Digraph: {document['input']['n']} vertices, {document['input']['m']} arcs")
    print(f"🎯 Complementarity eigenvalues: {document['cardinality']}")
    for entry in document['spectrum']:
        print(f"   • {entry['value']:.12f}  [{entry['lower_bound']:.12f}, {entry['upper_bound']:.12f}]"
              f"  witness {entry['witness']}")


def print_classification_summary(document: Dict) -> None:
    print(f"🔍 Digraph: {document['input']['n']} vertices, {document['input']['m']} arcs")
    print(f"🎯 Cardinality: {document['cardinality']} (exact: {document['exact_cardinality']})")
    for component in document['components']:
        descriptor = component['descriptor']
        print(f"   • {component['vertices']}: {descriptor['tag']}{tuple(descriptor['params'])}")
    if 'oracle' in document:
        agreement = document['oracle']['agreement']
        print(f"   Oracle agreement: {'✅' if agreement else '❌'}")


def print_census_summary(document: Dict) -> None:
    print("=" * 60)
    print("📊 DIGRAPH CENSUS")
    print("=" * 60)
    for n, table in sorted(document['per_n'].items(), key=lambda item: int(item[0])):
        counts = ', '.join(f"{bucket}: {count}" for bucket, count in table['by_cardinality'].items())
        print(f"n={n}: {table['total']} digraphs ({counts})")
    failures = document['disagreements']
    if failures:
        print(f"\n❌ {len(failures)} disagreements")
        for failure in failures:
            print(f"   • n={failure['n']} arcs={failure['arcs']}: {failure['reason']}")
    else:
        print("\n🎉 No disagreements")


def print_verify_summary(document: Dict) -> None:
    for check in document['witnesses']:
        print(f"✅ {check['value']:.12f}  witness {check['witness']}  "
              f"violation {check['max_violation']:.2e}  complementarity {check['complementarity']:.2e}")


PRETTY = {
    'spectrum': print_spectrum_summary,
    'classify': print_classification_summary,
    'census': print_census_summary,
    'verify': print_verify_summary,
}

COMMANDS = {
    'spectrum': cmd_spectrum,
    'classify': cmd_classify,
    'generate': cmd_generate,
    'census': cmd_census,
    'verify': cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='Human-readable summary instead of JSON')
    common.add_argument('-v', '--verbose', action='store_true', help='Debug logging on stderr')
    common.add_argument('--max-n', type=int, default=None,
                        help='Enumeration cap (census: largest vertex count)')

    parser = argparse.ArgumentParser(prog='compspec', description='Complementarity spectra of digraphs')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    spectrum = sub.add_parser('spectrum', parents=[common], help='Brute-force complementarity spectrum')
    spectrum.add_argument('file')
    spectrum.add_argument('--dedup-tol', type=float, default=None)
    spectrum.add_argument('--cert-tol', type=float, default=None)

    classify = sub.add_parser('classify', parents=[common], help='Cardinality verdict and family tags')
    classify.add_argument('file')
    classify.add_argument('--oracle', action='store_true', help='Cross-check against the brute-force spectrum')

    gen = sub.add_parser('generate', parents=[common], help='Write a family member as an edge list')
    gen.add_argument('family', choices=sorted(GENERATORS))
    gen.add_argument('params', nargs='*')
    gen.add_argument('--out', default=None)

    census = sub.add_parser('census', parents=[common], help='Exhaustive oracle agreement census')
    census.add_argument('--jobs', type=int, default=1)

    verify = sub.add_parser('verify', parents=[common], help='Check a witness for every spectrum value')
    verify.add_argument('file')
    verify.add_argument('--eps', type=float, default=None)
    verify.add_argument('--lambda-offset', type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr, force=True)

    try:
        overrides = {
            'dedup_tol': getattr(args, 'dedup_tol', None),
            'cert_tol': getattr(args, 'cert_tol', None),
            'verify_eps': getattr(args, 'eps', None),
        }
        if args.command == 'census':
            args.max_n = args.max_n or CENSUS_DEFAULT_MAX_N
        else:
            overrides['max_n'] = args.max_n
        config = load_config(overrides)
        output, code = COMMANDS[args.command](args, config)
    except (ComplementaritySpectrumError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return exit_code_for(e)

    if isinstance(output, str):
        sys.stdout.write(output)
    elif args.pretty:
        PRETTY[args.command](output)
    else:
        sys.stdout.write(encode_document(output))
    return code


if __name__ == "__main__":
    sys.exit(main())
