# Butterfly/utils/render_template.py

import json
from pathlib import Path

from jinja2 import Environment, FileSystemLoader

from Butterfly.utils.logger import logger

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "template"

template_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    enable_async=True,
    cache_size=50,
    auto_reload=False,
    optimized=True,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


template_env.filters["scalar"] = _scalar


async def render_report(context: dict, template_name: str = "report.txt") -> str:
    try:
        template = template_env.get_template(template_name)
        return await template.render_async(**context)
    except Exception as e:
        logger.error(f"Error rendering {template_name}: {e}", exc_info=True)
        raise
