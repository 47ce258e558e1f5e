from setuptools import setup, find_packages


# Dependencies for using the library.
install_requires = [
    'attrs',
    'click >=7.0,<8.2',
    'sympy'
]


setup(
    name='current-chars',
    version='0.1',
    packages=find_packages(),
    python_requires='>=3.8',
    install_requires=install_requires,
    extras_require={
        'testing':  ['pytest >=6.0'],
    },
    entry_points={
        'console_scripts': [
            'current-chars=current_chars.cli:main',
        ],
    }
)
