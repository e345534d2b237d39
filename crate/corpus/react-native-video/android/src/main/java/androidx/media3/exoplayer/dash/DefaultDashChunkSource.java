package androidx.media3.exoplayer.dash;

import androidx.media3.datasource.DataSource;

public class DefaultDashChunkSource {
    public static final class Factory {
        public Factory(DataSource.Factory mediaDataSourceFactory) {
        }
    }
}