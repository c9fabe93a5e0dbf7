import webbrowser
from threading import Timer

import plotly.graph_objects as go
from dash import Dash, dcc, html
from plotly.subplots import make_subplots

from mip_export import mip_db
from models import ImageVolume

# (ось проекции, подпись горизонтальной оси, подпись вертикальной оси)
PROJECTIONS = [("x", "z, м", "y, м"), ("y", "z, м", "x, м"), ("z", "y, м", "x, м")]


def build_mip_figure(volume: ImageVolume, db_floor: float = -40.0) -> go.Figure:
    """
    Три проекции максимальной интенсивности (вдоль x, y и z) в дБ на одной фигуре.

    Args:
        volume: ImageVolume - восстановленный объём
        db_floor: float - нижняя граница шкалы, дБ
    """
    axes = [volume.axis(0), volume.axis(1), volume.axis(2)]
    fig = make_subplots(rows=1, cols=3, subplot_titles=[f"Проекция вдоль {name}" for name, _, _ in PROJECTIONS])

    for col, (name, x_title, y_title) in enumerate(PROJECTIONS, start=1):
        db = mip_db(volume, name, db_floor)
        remaining = [axes[i] for i in range(3) if "xyz"[i] != name]
        fig.add_trace(
            go.Heatmap(
                z=db,
                x=remaining[1],
                y=remaining[0],
                zmin=db_floor,
                zmax=0,
                colorscale="Gray",
                showscale=col == 3,
                colorbar=dict(title="дБ"),
                hovertemplate="%{x:.4f}, %{y:.4f}: %{z:.1f} дБ<extra></extra>",
            ),
            row=1, col=col,
        )
        fig.update_xaxes(title_text=x_title, row=1, col=col)
        fig.update_yaxes(title_text=y_title, scaleanchor=f"x{col if col > 1 else ''}", row=1, col=col)

    fig.update_layout(title="Голографическое изображение (MIP)", height=600)
    return fig


def create_mip_app(volume: ImageVolume, db_floor: float = -40.0) -> Dash:
    app = Dash(__name__)
    app.layout = html.Div([
        html.Div(style={'width': '100%', 'height': '100vh'}, children=[
            dcc.Graph(figure=build_mip_figure(volume, db_floor), style={'height': '100%'})
        ])
    ])
    return app


def create_mip_viewer(volume: ImageVolume, db_floor: float = -40.0, port: int = 8050) -> None:
    """
    Показывает проекции объёма в браузере на локальном сервере Dash.
    """
    app = create_mip_app(volume, db_floor)

    def open_browser():
        webbrowser.open_new(f'http://localhost:{port}/')

    # браузер открываем после запуска сервера
    Timer(1, open_browser).start()

    print(f"\nЗапускаем сервер на http://localhost:{port}")
    print("Для завершения работы нажмите Ctrl+C")
    app.run(debug=False, port=port)
