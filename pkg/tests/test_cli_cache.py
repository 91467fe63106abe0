import json

import pytest

from app import build_parser, main
from core.cache import SeriesCache
from core.cache.models import cache_key
from core.errors import FanParseError
from modules import CommandHandlers, report_passed
from modules.series.handlers import ShiftHandlers
from utils import canonical_json, format_rational, parse_vector
from utils.file import parse_fan_text
from .conftest import ALL_FANS, fixture_path


@pytest.fixture(autouse=True)
def fresh_state(tmp_path, monkeypatch):
    cache = SeriesCache(cache_dir=tmp_path / 'cache', memory_slots=8, enabled=True)
    monkeypatch.setattr(SeriesCache, '_instance', cache)
    monkeypatch.setattr(CommandHandlers, '_services', {})
    return cache


def reset_services(monkeypatch):
    monkeypatch.setattr(CommandHandlers, '_services', {})


def restart(tmp_path, monkeypatch):
    """Fresh services and an empty in-memory cache over the same cache directory"""
    reset_services(monkeypatch)
    cache = SeriesCache(cache_dir=tmp_path / 'cache', memory_slots=8, enabled=True)
    monkeypatch.setattr(SeriesCache, '_instance', cache)


def run_cli(args, out):
    code = main(args + ['--out', str(out)])
    return code, out.read_bytes()


def test_parse_error_location():
    text = '{"dimension": 2,\n "rays": [[1, 0], [0, 1]],\n "cones": [[1, 2]\n}'
    with pytest.raises(FanParseError) as e:
        parse_fan_text(text)
    assert e.value.code == 'PARSE_ERROR'
    assert (e.value.line, e.value.column) == (4, 1)


def test_field_error_location():
    text = '{"dimension": 2,\n "rays": [[1, 0], [0, "a"]],\n "cones": [[1, 2]]}'
    with pytest.raises(FanParseError) as e:
        parse_fan_text(text)
    assert (e.value.line, e.value.column) == (2, 2)


def test_missing_field():
    with pytest.raises(FanParseError) as e:
        parse_fan_text('{"dimension": 1, "rays": [[1], [-1]]}')
    assert 'cones' in e.value.message


def test_fan_file_omega():
    fan_file = parse_fan_text(
        '{"dimension": 1, "rays": [[1], [-1]], "cones": [[1], [2]], "omega": ["1/2", 1]}'
    )
    assert [format_rational(v) for v in fan_file.omega] == ['1/2', '1']


def test_parse_vector():
    assert parse_vector('1, 0,2') == (1, 0, 2)
    assert [format_rational(v) for v in parse_vector('1/2,3', kind=None)] == ['1/2', '3']


def test_default_cutoff():
    args = build_parser().parse_args(['ifun', 'fan.json'])
    assert args.cutoff == 4


def test_negative_cutoff_rejected(tmp_path):
    with pytest.raises(SystemExit) as e:
        main(['ifun', str(fixture_path('p1')), '--cutoff', '-1', '--out', str(tmp_path / 'r.json')])
    assert e.value.code == 2
    assert not (tmp_path / 'r.json').exists()


def test_check_report(tmp_path):
    code, data = run_cli(['check', str(fixture_path('p2')), '--no-cache'], tmp_path / 'r.json')
    report = json.loads(data)
    assert code == 0
    assert report['status'] == 'ok'
    assert report['omega'] == ['1', '1', '1']
    assert len(report['results']['fixed_points']) == 3
    assert all(w['degree'] == [1, 1, 1] for w in report['results']['wall_classes'])
    assert report['results']['basis'] == ['1', 'u1', 'u1*u2']
    assert report['verdicts']['pairing_nondegenerate']
    assert report['results']['pairing_matrix'][0] == ['0', '0', '1']


def test_non_smooth_fan(tmp_path):
    fan = tmp_path / 'bad.json'
    fan.write_text('{"dimension": 2, "rays": [[1, 0], [1, 2]], "cones": [[1, 2]]}')
    code, data = run_cli(['check', str(fan)], tmp_path / 'r.json')
    report = json.loads(data)
    assert code == 1
    assert report['status'] == 'error'
    assert report['error']['code'] == 'NOT_SMOOTH'


def test_malformed_fan_file(tmp_path):
    fan = tmp_path / 'broken.json'
    fan.write_text('{"dimension": 2,\n "rays": [[1, 0]\n')
    code, data = run_cli(['check', str(fan)], tmp_path / 'r.json')
    report = json.loads(data)
    assert code == 1
    assert report['error']['code'] == 'PARSE_ERROR'
    assert 'line' in report['error']['details']


def test_invalid_omega_option(tmp_path):
    code, data = run_cli(
        ['check', str(fixture_path('p1')), '--omega', '1,-1'], tmp_path / 'r.json'
    )
    assert code == 1
    assert json.loads(data)['error']['code'] == 'INVALID_OMEGA'


def test_zero_cutoff_ifun(tmp_path):
    code, data = run_cli(
        ['ifun', str(fixture_path('p1')), '--cutoff', '0'], tmp_path / 'r.json'
    )
    report = json.loads(data)
    assert code == 0
    assert list(report['results']['coefficients']) == ['(0,0)']


def test_cached_reports_are_identical(tmp_path, monkeypatch):
    args = ['ifun', str(fixture_path('p1')), '--cutoff', '4']
    code, first = run_cli(args, tmp_path / 'a.json')
    assert code == 0
    assert list((tmp_path / 'cache').glob('*.json'))

    restart(tmp_path, monkeypatch)
    _, second = run_cli(args, tmp_path / 'b.json')

    reset_services(monkeypatch)
    _, fresh = run_cli(args + ['--no-cache'], tmp_path / 'c.json')
    assert first == second == fresh


def test_corrupt_cache_is_recomputed(tmp_path, monkeypatch):
    args = ['mirror', str(fixture_path('p1')), '--cutoff', '2']
    _, first = run_cli(args, tmp_path / 'a.json')
    for path in (tmp_path / 'cache').glob('*.json'):
        path.write_text('{"key": ')

    restart(tmp_path, monkeypatch)
    code, second = run_cli(args, tmp_path / 'b.json')
    assert code == 0
    assert first == second


def test_stale_cache_entry_is_ignored(tmp_path):
    cache = SeriesCache(cache_dir=tmp_path, memory_slots=2, enabled=True)
    cache.put('abc', 'check', {'results': {}, 'verdicts': {}})
    path = tmp_path / 'abc.json'
    entry = json.loads(path.read_text())
    entry['version'] = -1
    path.write_text(json.dumps(entry))
    assert SeriesCache(cache_dir=tmp_path, enabled=True).get('abc') is None


def test_cache_key_depends_on_cutoff():
    assert cache_key('h', '2', None, 'ifun') != cache_key('h', '4', None, 'ifun')
    assert cache_key('h', '2', None, 'ifun') == cache_key('h', '2', None, 'ifun')


def test_mirror_report_on_p2(tmp_path):
    code, data = run_cli(
        ['mirror', str(fixture_path('p2')), '--cutoff', '3', '--no-cache'], tmp_path / 'r.json'
    )
    report = json.loads(data)
    assert code == 0
    assert report['verdicts']['tau_trivial']
    assert report['verdicts']['batyrev_quantum']
    plain = report['results']['quantum_products_nonequivariant']['u1']
    assert plain['(1,1,1)'] == [['0', '0', '1'], ['0', '0', '0'], ['0', '0', '0']]


def test_mirror_report_on_f2_has_no_projective_verdicts(tmp_path):
    code, data = run_cli(
        ['mirror', str(fixture_path('f2')), '--cutoff', '1', '--no-cache'], tmp_path / 'r.json'
    )
    report = json.loads(data)
    assert 'tau_trivial' not in report['verdicts']
    assert report['verdicts']['factorization_exact']


def test_flowcheck_report(tmp_path):
    code, data = run_cli(
        ['flowcheck', str(fixture_path('f1')), '--cutoff', '2'], tmp_path / 'r.json'
    )
    report = json.loads(data)
    assert code == 0
    assert report['verdicts']['flow_u1']
    assert report['verdicts']['multi_flow_u1_u2']


def test_qcheck_rejects_surfaces(tmp_path):
    code, data = run_cli(['qcheck', str(fixture_path('f1'))], tmp_path / 'r.json')
    assert code == 1
    assert json.loads(data)['error']['code'] == 'NOT_PROJECTIVE_SPACE'


def test_qcheck_on_p3(tmp_path):
    code, data = run_cli(['qcheck', str(fixture_path('p3'))], tmp_path / 'r.json')
    assert code == 0
    assert json.loads(data)['verdicts'] == {'multi_flow_all': True, 'quantum_relation': True}


def test_shift_handler_pair():
    report = ShiftHandlers.shift(fixture_path('p1'), k=(1, 0), l=(0, 1), use_cache=False)
    assert report_passed(report)
    assert report['results']['compositions']['(1,0)*(0,1)'] == [1, 1]
    factors = report['results']['factors']['(1,0)']
    assert factors['x[2]']['offset'] == [1, 1]


@pytest.mark.parametrize('k, code', [
    ('--k=1', 'ARITY_MISMATCH'),
    ('--k=1,0,0,0', 'ARITY_MISMATCH'),
    ('--k=-1,0,0', 'INVALID_COCHARACTER'),
])
def test_shift_rejects_bad_cocharacter(tmp_path, k, code):
    exit_code, data = run_cli(
        ['shift', str(fixture_path('p2')), k, '--no-cache'], tmp_path / 'r.json'
    )
    report = json.loads(data)
    assert exit_code == 1
    assert report['status'] == 'error'
    assert report['error']['code'] == code


def test_shift_rejects_short_pair(tmp_path):
    exit_code, data = run_cli(
        ['shift', str(fixture_path('p2')), '--k=1,0,0', '--l=0,1', '--no-cache'],
        tmp_path / 'r.json'
    )
    assert exit_code == 1
    assert json.loads(data)['error']['code'] == 'ARITY_MISMATCH'


@pytest.mark.parametrize('name', ALL_FANS)
def test_check_fixed_point_verdicts(tmp_path, name):
    code, data = run_cli(['check', str(fixture_path(name)), '--no-cache'], tmp_path / 'r.json')
    report = json.loads(data)
    assert code == 0
    assert report['verdicts']['euler_classes_nonzero']
    assert report['verdicts']['tangent_weights_distinct']
    assert report['verdicts']['pairing_nondegenerate']


def test_timing_is_opt_in(tmp_path):
    _, data = run_cli(['check', str(fixture_path('p1'))], tmp_path / 'r.json')
    assert 'timing' not in json.loads(data)
    _, data = run_cli(['check', str(fixture_path('p1')), '--timing'], tmp_path / 's.json')
    assert 'timing' in json.loads(data)


def test_canonical_json_is_sorted():
    assert canonical_json({'b': 1, 'a': [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
