# This file is part of PYBETTI
# vim: set fileencoding=utf-8 :
#
# MIT License
#
# Copyright (c) 2026 The PYBETTI authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
""" Command line front end: pybetti <command> [options]

Exit codes: 0 success or certificate, 1 input error, 2 diagram not in the cone,
3 obstruction, exclusion or counterexample, 4 inconclusive.
"""

import argparse
import logging
import sys

from pybetti.degrees import DegreeSequence, INF
from pybetti.diagrams import pure_diagram, smallest_integral_point
from pybetti.diagramformat import read_diagram, format_diagram, diagram_to_json, dump_json
from pybetti.decomposition import bs_decompose, CoefficientUnits, format_chain, chain_to_json
from pybetti.filtration import analyze, Verdict, north_fork_degrees, truncate, \
    predict_quotient_betti, format_cutoffs
from pybetti.monotonicity import strand_ratio, check_monotonicity, sweep_verify
from pybetti.quiver import is_in_bmod, generators, enumerate_members, Member
from pybetti.sparserays import sparse_ray
from pybetti.errors import ParseError, ValidationError, NotInConeError, InconclusiveError, \
    NotInSimplexError, ConstructionError
from pybetti.utils.source import add_all_sources_to_argparse
from pybetti.utils.source.stdin import StdinSourceGenerator
from pybetti.utils.gettext_wrapper import gettext as _, ngettext

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOT_IN_CONE = 2
EXIT_OBSTRUCTION = 3
EXIT_INCONCLUSIVE = 4


class ArgumentParser(argparse.ArgumentParser):
    """ argparse.ArgumentParser raising ParseError instead of exiting on bad input """
    def error(self, message):
        raise ParseError(message)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose",
                        action="count",
                        default=0,
                        help=_("Log the computation on the error stream, repeat for more details"))
    common.add_argument("--json",
                        action="store_true",
                        help=_("Write a JSON document instead of tables"))
    common.add_argument("--units",
                        choices=[units.value for units in CoefficientUnits],
                        default=CoefficientUnits.PI_TILDE.value,
                        help=_("Units of the chain coefficients: pi, or the smallest "
                               "integral point pi~ (default)"))
    common.add_argument("--n",
                        type=int,
                        dest="n",
                        metavar="VARS",
                        help=_("Number of variables of the ring, checked against the diagram"))
    common.add_argument("--extended-hypotheses",
                        action="store_true",
                        help=_("Let a separated prefix of the chain play the role of its "
                               "first step when predicting a quotient"))
    common.add_argument("--no-hypotheses",
                        action="store_false",
                        dest="enforce_hypotheses",
                        help=_("Do not require the diagram to be the one of a finite length "
                               "module"))
    return common


def _diagram_command(subparsers, name, handler, help_text, common):
    parser = subparsers.add_parser(name, parents=[common], help=help_text)
    add_all_sources_to_argparse(parser, StdinSourceGenerator)
    parser.set_defaults(handler=handler)
    return parser


def _read_input_diagram(config):
    return read_diagram(config.source_generator.create(config), config.n)


def _write_diagram(config, out, diagram):
    if config.json:
        out.write(dump_json(diagram_to_json(diagram)) + "\n")
    else:
        out.write(format_diagram(diagram) + "\n")


def _format_degree(value):
    return str(value) if value is INF else value


def _cmd_pure(config, out):
    sequence = DegreeSequence.parse(config.sequence, config.n)
    _write_diagram(config, out, pure_diagram(sequence))
    return EXIT_OK


def _cmd_integral_point(config, out):
    sequence = DegreeSequence.parse(config.sequence, config.n)
    _write_diagram(config, out, smallest_integral_point(sequence))
    return EXIT_OK


def _cmd_decompose(config, out):
    chain = bs_decompose(_read_input_diagram(config), CoefficientUnits(config.units))
    if config.json:
        out.write(dump_json(chain_to_json(chain)) + "\n")
    else:
        out.write(format_chain(chain) + "\n")
    return EXIT_OK


def _cmd_check_split(config, out):
    report = analyze(_read_input_diagram(config), config.n, config.enforce_hypotheses)
    chain = report.chain.to_units(CoefficientUnits(config.units))

    if config.json:
        document = {
            "chain": chain_to_json(chain),
            "pairs": [{"separated": flags.separated, "strong_split": flags.strong_split}
                      for flags in report.pair_flags],
            "step_integral": list(report.step_integral),
            "verdict": report.verdict.value,
            "obstruction_step": report.obstruction_step,
            "witness": diagram_to_json(report.witness) if report.witness is not None else None,
            }
        out.write(dump_json(document) + "\n")
    else:
        out.write(format_chain(chain) + "\n")
        for k, flags in enumerate(report.pair_flags):
            out.write("pair %d: separated=%s strong-split=%s\n" %
                      (k, "yes" if flags.separated else "no",
                       "yes" if flags.strong_split else "no"))
        if report.verdict is Verdict.OBSTRUCTION:
            out.write("verdict: %s at step %d\n" % (report.verdict.value,
                                                    report.obstruction_step))
            out.write("witness:\n%s\n" % format_diagram(report.witness))
        else:
            out.write("verdict: %s\n" % report.verdict.value)

    if report.verdict is Verdict.OBSTRUCTION:
        return EXIT_OBSTRUCTION
    if report.verdict is Verdict.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_north_fork(config, out):
    diagram = _read_input_diagram(config)
    cutoffs = north_fork_degrees(diagram)
    truncation = truncate(diagram, cutoffs)
    if config.json:
        document = {
            "cutoffs": [_format_degree(cutoff) for cutoff in cutoffs],
            "truncation": diagram_to_json(truncation),
            }
        out.write(dump_json(document) + "\n")
    else:
        out.write("f = %s\n%s\n" % (format_cutoffs(cutoffs), format_diagram(truncation)))
    return EXIT_OK


def _cmd_quotient_predict(config, out):
    diagram = _read_input_diagram(config)
    _write_diagram(config, out, predict_quotient_betti(
        diagram, config.n,
        extended_hypotheses=config.extended_hypotheses,
        enforce_hypotheses=config.enforce_hypotheses))
    return EXIT_OK


def _cmd_monotonicity(config, out):
    if config.sweep:
        max_degree, n = config.sweep
        report = sweep_verify(max_degree, n, config.index)
        if config.json:
            document = {
                "max_degree": report.max_degree,
                "n": report.n,
                "indices": list(report.indices),
                "checked": report.checked,
                "counterexamples": [{"d": str(d), "e": str(e), "i": i}
                                    for d, e, i in report.counterexamples],
                }
            out.write(dump_json(document) + "\n")
        else:
            out.write(ngettext("checked %d pair", "checked %d pairs", report.checked) %
                      report.checked + ", " +
                      ngettext("%d counterexample", "%d counterexamples",
                               len(report.counterexamples)) % len(report.counterexamples) + "\n")
            for d, e, i in report.counterexamples:
                out.write("counterexample: %s %s at %d\n" % (d, e, i))
        return EXIT_OBSTRUCTION if report.counterexamples else EXIT_OK

    if len(config.pair) != 2 or config.index is None:
        raise ValidationError(_("give two degree sequences and --index, or --sweep"))
    d, e = (DegreeSequence.parse(literal, config.n) for literal in config.pair)
    holds = check_monotonicity(d, e, config.index)
    ratio_d, ratio_e = strand_ratio(d, config.index), strand_ratio(e, config.index)
    if config.json:
        document = {"d": str(d), "e": str(e), "i": config.index,
                    "ratio_d": str(ratio_d), "ratio_e": str(ratio_e), "holds": holds}
        out.write(dump_json(document) + "\n")
    else:
        out.write("%s %s %s\n" % (ratio_d, "<" if holds else "is not <", ratio_e))
    return EXIT_OK if holds else EXIT_OBSTRUCTION


def _format_triplet(triplet):
    return "(%d,%d,%d)" % tuple(triplet)


def _cmd_semigroup_check(config, out):
    result = is_in_bmod(config.r, config.s, config.t)
    if isinstance(result, Member):
        if config.json:
            document = {"triplet": [config.r, config.s, config.t], "member": True,
                        "decomposition": [list(triplet) for triplet in result.decomposition]}
            out.write(dump_json(document) + "\n")
        else:
            terms = " + ".join(_format_triplet(triplet) for triplet in result.decomposition)
            out.write("member: %s\n" % (terms or "0"))
        return EXIT_OK

    if config.json:
        document = {"triplet": [config.r, config.s, config.t], "member": False,
                    "family": result.family, "provenance": result.provenance}
        out.write(dump_json(document) + "\n")
    else:
        out.write("excluded: %s (%s)\n" % (result.family, result.provenance))
    return EXIT_OBSTRUCTION


def _cmd_semigroup_generators(config, out):
    pairs = generators()
    if config.json:
        document = [{"triplet": list(triplet), "diagram": diagram_to_json(diagram)}
                    for triplet, diagram in pairs]
        out.write(dump_json(document) + "\n")
    else:
        out.write("\n\n".join("%s\n%s" % (_format_triplet(triplet), format_diagram(diagram))
                              for triplet, diagram in pairs) + "\n")
    return EXIT_OK


def _cmd_semigroup_enumerate(config, out):
    report = enumerate_members(config.bound)
    members = sum(1 for _, result in report.results if isinstance(result, Member))
    if config.json:
        document = {
            "bound": report.bound,
            "admissible": len(report.results),
            "members": members,
            "excluded": len(report.results) - members,
            "disagreements": [list(triplet) for triplet in report.disagreements],
            }
        out.write(dump_json(document) + "\n")
    else:
        out.write("%d admissible, %d members, %d excluded, %d disagreements\n" %
                  (len(report.results), members, len(report.results) - members,
                   len(report.disagreements)))
        for triplet in report.disagreements:
            out.write("disagreement: %s\n" % _format_triplet(triplet))
    return EXIT_OBSTRUCTION if report.disagreements else EXIT_OK


def _certificate_to_json(certificate):
    return {
        "p": certificate.p,
        "alpha": certificate.alpha,
        "sequences": [str(sequence) for sequence in certificate.sequences],
        "weights": [str(weight) for weight in certificate.weights],
        "obstruction_multiple": certificate.obstruction_multiple,
        "checks": [{"name": check.name, "passed": check.passed, "detail": check.detail}
                   for check in certificate.checks],
        "diagram": format_diagram(certificate.diagram),
        "superseded": _certificate_to_json(certificate.superseded)
                      if certificate.superseded else None,
        }


def _write_certificate(out, certificate, prefix=""):
    out.write("%sp = %d, alpha = %d\n" % (prefix, certificate.p, certificate.alpha))
    out.write("%schain: %s\n" % (prefix, " + ".join(
        "%s * pi~%s" % (weight, sequence)
        for weight, sequence in zip(certificate.weights, certificate.sequences))))
    out.write("%sobstruction multiple: %s\n" % (prefix, certificate.obstruction_multiple))
    for check in certificate.checks:
        out.write("%scheck %s: %s\n" % (prefix, check.name,
                                         "passed" if check.passed else
                                         "FAILED (%s)" % check.detail))


def _cmd_sparse_ray(config, out):
    certificate = sparse_ray(config.p)
    if config.json:
        out.write(dump_json(_certificate_to_json(certificate)) + "\n")
        return EXIT_OK

    _write_certificate(out, certificate)
    if certificate.superseded:
        out.write("supersedes:\n")
        _write_certificate(out, certificate.superseded, prefix="  ")
    out.write(format_diagram(certificate.diagram) + "\n")
    return EXIT_OK


def build_parser():
    """ The argument parser of the pybetti command """
    common = _common_options()
    parser = ArgumentParser(prog="pybetti",
                            description=_("Exact Boij-Soderberg computations on Betti diagrams"))
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, handler, help_text in (
            ("pure", _cmd_pure, _("Pure diagram pi_d of a degree sequence")),
            ("integral-point", _cmd_integral_point,
             _("Smallest integral point pi~_d of the ray of pi_d"))):
        command = subparsers.add_parser(name, parents=[common], help=help_text)
        command.add_argument("sequence", metavar="SEQUENCE",
                             help=_("Degree sequence such as \"(0,1,2,inf)\""))
        command.set_defaults(handler=handler)

    _diagram_command(subparsers, "decompose", _cmd_decompose,
                     _("Boij-Soderberg decomposition of a diagram"), common)
    _diagram_command(subparsers, "check-split", _cmd_check_split,
                     _("Splitting certificates and integrality obstructions"), common)
    _diagram_command(subparsers, "north-fork", _cmd_north_fork,
                     _("North fork cutoffs and truncation"), common)
    _diagram_command(subparsers, "quotient-predict", _cmd_quotient_predict,
                     _("Predicted diagram of the quotient by the North fork"), common)

    command = subparsers.add_parser("monotonicity", parents=[common],
                                    help=_("Compare strand ratios of pure diagrams"))
    command.add_argument("pair", nargs="*", metavar="SEQUENCE",
                         help=_("Two degree sequences d < e agreeing at i and i+1"))
    command.add_argument("--index", "-i", type=int, dest="index",
                         help=_("Strand index i; with --sweep, every index when omitted"))
    command.add_argument("--sweep", type=int, nargs=2, metavar=("MAX_DEGREE", "N"),
                         help=_("Check every admissible pair with degrees up to MAX_DEGREE"))
    command.set_defaults(handler=_cmd_monotonicity)

    command = subparsers.add_parser("semigroup", help=_("Semigroup of diagrams of modules "
                                                        "in the quiver simplex"))
    semigroup = command.add_subparsers(dest="semigroup_command", required=True,
                                       metavar="SUBCOMMAND")
    check = semigroup.add_parser("check", parents=[common],
                                 help=_("Membership of a triplet (r, s, t)"))
    for coordinate in ("r", "s", "t"):
        check.add_argument(coordinate, type=int)
    check.set_defaults(handler=_cmd_semigroup_check)
    listing = semigroup.add_parser("generators", parents=[common],
                                   help=_("The ten minimal generators"))
    listing.set_defaults(handler=_cmd_semigroup_generators)
    enumeration = semigroup.add_parser("enumerate", parents=[common],
                                       help=_("Compare the classification with a search"))
    enumeration.add_argument("--bound", type=int, required=True,
                             help=_("Largest value of r+s+t"))
    enumeration.set_defaults(handler=_cmd_semigroup_enumerate)

    command = subparsers.add_parser("sparse-ray", parents=[common],
                                    help=_("Certified sparse ray of a prime"))
    command.add_argument("p", type=int)
    command.set_defaults(handler=_cmd_sparse_ray)

    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """ Run the command line and return its exit code """
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        config = build_parser().parse_args(argv)
        config.input_stream = stdin
        if config.verbose:
            logging.basicConfig(stream=stderr,
                                level=logging.DEBUG if config.verbose > 1 else logging.INFO,
                                format="%(name)s: %(message)s")
        return config.handler(config, stdout)
    except SystemExit as err:
        # --help
        return err.code or EXIT_OK
    except (ValidationError, NotInSimplexError) as err:
        stderr.write(_("error: %s") % err + "\n")
        return EXIT_INPUT_ERROR
    except NotInConeError as err:
        stderr.write(_("not in the cone: %s") % err + "\n")
        if err.remainder is not None and not err.remainder.is_zero():
            try:
                stderr.write(_("remainder:") + "\n" + format_diagram(err.remainder) + "\n")
            except ValidationError:
                stderr.write(_("remainder: %r") % err.remainder + "\n")
        return EXIT_NOT_IN_CONE
    except ConstructionError as err:
        stderr.write(_("construction failed: %s") % err + "\n")
        return EXIT_OBSTRUCTION
    except InconclusiveError as err:
        stderr.write(_("inconclusive: %s") % err + "\n")
        return EXIT_INCONCLUSIVE
    except OSError as err:
        stderr.write(_("error: %s") % err + "\n")
        return EXIT_INPUT_ERROR


def main():
    """ Entry point of the pybetti console script """
    sys.exit(run())


if __name__ == "__main__":
    main()
