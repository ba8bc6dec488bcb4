from flask import Blueprint, request, jsonify, current_app

from .cli import COMMANDS, run
from .errors import ParseError

bp = Blueprint('speh', __name__)

@bp.route('/api/status')
def status():
    """Report the available commands and the active defaults."""
    return jsonify({
        'commands': sorted(COMMANDS),
        'prime_bound': current_app.config['SPEH_PRIME_BOUND'],
        'trials': current_app.config['SPEH_DEFAULT_TRIALS'],
        'precision': current_app.config['SPEH_PRECISION'],
    })

@bp.route('/api/<command>', methods=['POST'])
def dispatch(command):
    """Run one command; the JSON body carries the same arguments as the CLI."""
    if command not in COMMANDS:
        return jsonify(ParseError(f"unknown command {command!r}").to_dict()), 404

    data = request.get_json(silent=True)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        return jsonify(ParseError('request body must be a JSON object').to_dict()), 400

    # Server-wide defaults apply when the body leaves them out
    if command == 'check':
        data.setdefault('trials', current_app.config['SPEH_DEFAULT_TRIALS'])
        data.setdefault('seed', current_app.config['SPEH_DEFAULT_SEED'])
    if command == 'classify':
        data.setdefault('primeBound', current_app.config['SPEH_PRIME_BOUND'])
    if command == 'adele':
        data.setdefault('precision', current_app.config['SPEH_PRECISION'])

    try:
        payload, code = run(command, data)
    except Exception as e:
        current_app.logger.error(f"Error in /api/{command}: {str(e)}", exc_info=True)
        return jsonify({'error': {'type': 'InternalError', 'message': str(e)}}), 500

    if code == 0:
        return jsonify(payload)
    current_app.logger.info(f"/api/{command} rejected: {payload['error']['message']}")
    return jsonify(payload), 400 if code == 1 else 422
