import os
from flask import Flask
from dotenv import load_dotenv

from . import config

# Load environment variables
load_dotenv()

def create_app(overrides=None):
    """Create and configure the Flask application."""
    app = Flask(__name__)

    # Configure app
    app.config.update(
        SECRET_KEY=os.getenv('SECRET_KEY', 'dev-secret-key'),
        SPEH_PRIME_BOUND=config.prime_bound(),
        SPEH_DEFAULT_TRIALS=config.DEFAULT_TRIALS,
        SPEH_DEFAULT_SEED=config.DEFAULT_SEED,
        SPEH_PRECISION=config.DEFAULT_PRECISION,
    )
    if overrides:
        app.config.update(overrides)
    app.json.sort_keys = True

    # Register blueprints
    from . import routes
    app.register_blueprint(routes.bp)

    # `flask speh <command>` mirrors the standalone CLI
    from .cli import cli
    app.cli.add_command(cli, name='speh')

    return app
