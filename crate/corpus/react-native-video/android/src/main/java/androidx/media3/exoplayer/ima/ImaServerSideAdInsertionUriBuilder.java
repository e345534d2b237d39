package androidx.media3.exoplayer.ima;

import android.net.Uri;

public class ImaServerSideAdInsertionUriBuilder {
    public ImaServerSideAdInsertionUriBuilder setAssetKey(String assetKey) {
        return this;
    }

    public ImaServerSideAdInsertionUriBuilder setContentSourceId(String contentSourceId) {
        return this;
    }

    public ImaServerSideAdInsertionUriBuilder setVideoId(String videoId) {
        return this;
    }

    public ImaServerSideAdInsertionUriBuilder setFormat(int format) {
        return this;
    }

    public Uri build() {
        return Uri.EMPTY;
    }
}

